#include "frobrel/io.hpp"

#include <fstream>
#include <sstream>

namespace frobrel {

namespace {

std::vector<int> json_int_list(const njson& j, const std::string& what) {
    if (!j.is_array()) throw std::runtime_error(what + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::runtime_error(what + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

njson subset_json(const Bits& b) {
    njson arr = njson::array();
    b.for_each([&](int i) { arr.push_back(i); });
    return arr;
}

}  // namespace

njson relation_to_json(const Relation& r) {
    njson j;
    j["src"] = r.src().size;
    j["dst"] = r.dst().size;
    njson pairs = njson::array();
    for (const auto& [x, y] : r.pairs()) pairs.push_back(njson::array({x, y}));
    j["pairs"] = pairs;
    return j;
}

njson frob_data_to_json(const FrobData& d) {
    const int n = d.n();
    njson j;
    j["n"] = n;
    njson labels = njson::array();
    for (int i = 0; i < n; ++i) labels.push_back(d.carrier.label(i));
    j["labels"] = labels;
    j["unit"] = subset_json(d.unit);
    j["counit"] = subset_json(d.counit);
    njson mul = njson::array();
    for (int x = 0; x < n; ++x) {
        njson row = njson::array();
        for (int y = 0; y < n; ++y) row.push_back(subset_json(d.mu(x, y)));
        mul.push_back(row);
    }
    j["mul"] = mul;
    return j;
}

FrobData frob_data_from_json(const njson& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::runtime_error("object json: missing integer field 'n'");
    const int n = j["n"].get<int>();
    if (n < 0) throw std::runtime_error("object json: 'n' must be >= 0");

    FinSet carrier(n);
    if (j.contains("labels")) {
        std::vector<std::string> labels;
        for (const auto& v : j["labels"]) {
            if (!v.is_string()) throw std::runtime_error("object json: labels must be strings");
            labels.push_back(v.get<std::string>());
        }
        try {
            carrier = FinSet(n, std::move(labels));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("object json: ") + e.what());
        }
    }

    FrobData d{carrier};
    auto fill_subset = [&](const char* key, Bits& target) {
        if (!j.contains(key)) throw std::runtime_error(std::string("object json: missing '") + key + "'");
        for (int e : json_int_list(j[key], key)) {
            if (e < 0 || e >= n)
                throw std::runtime_error(std::string("object json: '") + key + "' index out of range");
            target.set(e);
        }
    };
    fill_subset("unit", d.unit);
    fill_subset("counit", d.counit);

    if (!j.contains("mul") || !j["mul"].is_array() || static_cast<int>(j["mul"].size()) != n)
        throw std::runtime_error("object json: 'mul' must be an n x n array");
    for (int x = 0; x < n; ++x) {
        const njson& row = j["mul"][x];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::runtime_error("object json: 'mul' must be an n x n array");
        for (int y = 0; y < n; ++y)
            for (int z : json_int_list(row[y], "mul entry")) {
                if (z < 0 || z >= n)
                    throw std::runtime_error("object json: 'mul' element out of range");
                d.mu(x, y).set(z);
            }
    }
    return d;
}

njson parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return njson::parse(in);
    } catch (const njson::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

FrobData load_frob_data(const std::string& path) {
    try {
        return frob_data_from_json(parse_json_file(path));
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

njson partition_to_json(const PartitionFunction& pf) {
    njson j;
    j["preperiod"] = pf.preperiod;
    j["period"] = pf.period;
    j["proposition"] = pf.proposition;
    if (pf.formal_only) j["formal"] = true;
    return j;
}

njson group_to_json(const FiniteGroup& g) {
    njson j;
    j["size"] = g.size;
    j["cayley"] = g.cayley;
    j["name"] = g.name;
    return j;
}

FiniteGroup group_from_json(const njson& j) {
    if (!j.is_object() || !j.contains("cayley"))
        throw std::runtime_error("group json: missing 'cayley'");
    std::vector<std::vector<int>> table;
    for (const auto& row : j["cayley"]) table.push_back(json_int_list(row, "cayley row"));
    if (j.contains("size") && j["size"].get<int>() != static_cast<int>(table.size()))
        throw std::runtime_error("group json: 'size' disagrees with table");
    const std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
    try {
        return FiniteGroup::from_cayley(std::move(table), name);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("group json: ") + e.what());
    }
}

njson groupoid_to_json(const FiniteGroupoid& g) {
    njson j;
    j["objects"] = g.num_objects;
    j["morphisms"] = g.num_morphisms;
    j["source"] = g.source;
    j["target"] = g.target;
    j["compose"] = g.compose_table;
    j["identities"] = g.identity;
    j["inverses"] = g.inverse;
    j["name"] = g.name;
    return j;
}

FiniteGroupoid groupoid_from_json(const njson& j) {
    FiniteGroupoid g;
    try {
        g.num_objects = j.at("objects").get<int>();
        g.num_morphisms = j.at("morphisms").get<int>();
        g.source = json_int_list(j.at("source"), "source");
        g.target = json_int_list(j.at("target"), "target");
        for (const auto& row : j.at("compose"))
            g.compose_table.push_back(json_int_list(row, "compose row"));
        g.identity = json_int_list(j.at("identities"), "identities");
        g.inverse = json_int_list(j.at("inverses"), "inverses");
        if (j.contains("name")) g.name = j["name"].get<std::string>();
    } catch (const njson::exception& e) {
        throw std::runtime_error(std::string("groupoid json: ") + e.what());
    }
    try {
        return FiniteGroupoid::validated(std::move(g));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("groupoid json: ") + e.what());
    }
}

njson census_to_json(const Census& c) {
    njson j;
    j["n"] = c.n;
    j["count"] = c.count();
    njson objects = njson::array();
    for (const CensusEntry& e : c.entries) {
        njson o = frob_data_to_json(e.object.data());
        o["commutative"] = e.object.commutative();
        o["partition"] = partition_to_json(e.partition);
        o["constructions"] = e.constructions;
        objects.push_back(std::move(o));
    }
    j["objects"] = objects;
    return j;
}

namespace {

std::string set_text(const njson& elems, const njson& labels) {
    std::string s = "{";
    bool first = true;
    for (const auto& e : elems) {
        if (!first) s += ",";
        s += labels[e.get<int>()].get<std::string>();
        first = false;
    }
    return s + "}";
}

}  // namespace

std::string census_markdown(const njson& census_json) {
    std::ostringstream out;
    out << "| Case | Unit | Counit | Multiplication | Partition function |\n";
    out << "|---|---|---|---|---|\n";
    int case_no = 1;
    for (const auto& o : census_json.at("objects")) {
        const njson& labels = o.at("labels");
        const int n = o.at("n").get<int>();
        std::string mul;
        for (int x = 0; x < n; ++x) {
            if (x) mul += " / ";
            for (int y = 0; y < n; ++y) {
                if (y) mul += ", ";
                mul += set_text(o.at("mul")[x][y], labels);
            }
        }
        out << "| " << case_no++ << " | " << set_text(o.at("unit"), labels) << " | "
            << set_text(o.at("counit"), labels) << " | " << mul << " | "
            << o.at("partition").at("proposition").get<std::string>() << " |\n";
    }
    return out.str();
}

std::string dump_json(const njson& j) { return j.dump(2) + "\n"; }

}  // namespace frobrel
