#include "frobrel/diagram.hpp"

#include <cctype>

namespace frobrel {

Arity gen_arity(Gen g) {
    switch (g) {
        case Gen::Id: return {1, 1};
        case Gen::Swap: return {2, 2};
        case Gen::Eta: return {0, 1};
        case Gen::Eps: return {1, 0};
        case Gen::Mu: return {2, 1};
        case Gen::Delta: return {1, 2};
        case Gen::Beta: return {0, 2};
        case Gen::Alpha: return {1, 1};
    }
    return {0, 0};
}

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::Id: return "id";
        case Gen::Swap: return "swap";
        case Gen::Eta: return "eta";
        case Gen::Eps: return "eps";
        case Gen::Mu: return "mu";
        case Gen::Delta: return "delta";
        case Gen::Beta: return "beta";
        case Gen::Alpha: return "alpha";
    }
    return "?";
}

namespace {

struct Token {
    enum Kind { Name, Star, Semi, LParen, RParen } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '*') {
            out.push_back({Token::Star, "*"});
            ++i;
        } else if (c == ';') {
            out.push_back({Token::Semi, ";"});
            ++i;
        } else if (c == '(') {
            out.push_back({Token::LParen, "("});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::RParen, ")"});
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Name, src.substr(i, j - i)});
            i = j;
        } else {
            throw DiagramParseError("unknown character '" + std::string(1, c) + "'");
        }
    }
    return out;
}

Gen gen_from_name(const std::string& name, int layer) {
    for (Gen g : {Gen::Id, Gen::Swap, Gen::Eta, Gen::Eps, Gen::Mu, Gen::Delta, Gen::Beta,
                  Gen::Alpha})
        if (name == gen_name(g)) return g;
    throw DiagramParseError("unknown generator '" + name + "' in layer " + std::to_string(layer),
                            layer);
}

}  // namespace

Diagram parse_diagram(const std::string& src) {
    const std::vector<Token> tokens = tokenize(src);
    std::size_t pos = 0;
    Diagram d;

    auto parse_layer = [&](int layer_no) {
        int depth = 0;
        while (pos < tokens.size() && tokens[pos].kind == Token::LParen) {
            ++depth;
            ++pos;
        }
        std::vector<Gen> layer;
        while (true) {
            if (pos >= tokens.size() || tokens[pos].kind != Token::Name)
                throw DiagramParseError("expected generator in layer " + std::to_string(layer_no),
                                        layer_no);
            layer.push_back(gen_from_name(tokens[pos].text, layer_no));
            ++pos;
            if (pos < tokens.size() && tokens[pos].kind == Token::Star) {
                ++pos;
                continue;
            }
            break;
        }
        while (depth > 0) {
            if (pos >= tokens.size() || tokens[pos].kind != Token::RParen)
                throw DiagramParseError("unbalanced '(' in layer " + std::to_string(layer_no),
                                        layer_no);
            --depth;
            ++pos;
        }
        return layer;
    };

    int layer_no = 1;
    d.layers.push_back(parse_layer(layer_no));
    while (pos < tokens.size()) {
        if (tokens[pos].kind != Token::Semi)
            throw DiagramParseError("expected ';' after layer " + std::to_string(layer_no),
                                    layer_no);
        ++pos;
        ++layer_no;
        d.layers.push_back(parse_layer(layer_no));
    }

    // wire counts must agree between adjacent layers
    auto total = [](const std::vector<Gen>& layer) {
        Arity a;
        for (Gen g : layer) {
            a.in += gen_arity(g).in;
            a.out += gen_arity(g).out;
        }
        return a;
    };
    for (std::size_t k = 0; k + 1 < d.layers.size(); ++k) {
        const int produced = total(d.layers[k]).out;
        const int consumed = total(d.layers[k + 1]).in;
        if (produced != consumed)
            throw DiagramParseError("layer " + std::to_string(k + 2) + " needs " +
                                        std::to_string(consumed) + " wires, gets " +
                                        std::to_string(produced),
                                    static_cast<int>(k + 2));
    }
    d.in_arity = total(d.layers.front()).in;
    d.out_arity = total(d.layers.back()).out;
    return d;
}

std::string render_diagram(const Diagram& d) {
    std::string out;
    for (std::size_t k = 0; k < d.layers.size(); ++k) {
        if (k) out += " ; ";
        for (std::size_t i = 0; i < d.layers[k].size(); ++i) {
            if (i) out += " * ";
            out += gen_name(d.layers[k][i]);
        }
    }
    return out;
}

bool operator==(const Diagram& a, const Diagram& b) {
    return a.layers == b.layers && a.in_arity == b.in_arity && a.out_arity == b.out_arity;
}

namespace {

Relation gen_relation(Gen g, const FrobObject& f) {
    switch (g) {
        case Gen::Id: return identity(FinSet(f.n()));
        case Gen::Swap: return swap_relation(FinSet(f.n()));
        case Gen::Eta: return unit_relation(f);
        case Gen::Eps: return counit_relation(f);
        case Gen::Mu: return mul_relation(f);
        case Gen::Delta: return comul_relation(f);
        case Gen::Beta: return copairing_relation(f);
        case Gen::Alpha: return alpha_relation(f);
    }
    throw std::logic_error("gen_relation: unreachable");
}

}  // namespace

Relation evaluate(const Diagram& d, const FrobObject& f) {
    Relation acc;
    bool first = true;
    for (const auto& layer : d.layers) {
        Relation row = gen_relation(layer[0], f);
        for (std::size_t i = 1; i < layer.size(); ++i)
            row = product(row, gen_relation(layer[i], f));
        acc = first ? row : compose(acc, row);
        first = false;
    }
    return acc;
}

bool equal_diagrams(const Diagram& d1, const Diagram& d2, const FrobObject& f) {
    if (d1.in_arity != d2.in_arity || d1.out_arity != d2.out_arity)
        throw std::invalid_argument("equal_diagrams: arity mismatch (" +
                                    std::to_string(d1.in_arity) + "->" +
                                    std::to_string(d1.out_arity) + " vs " +
                                    std::to_string(d2.in_arity) + "->" +
                                    std::to_string(d2.out_arity) + ")");
    return evaluate(d1, f) == evaluate(d2, f);
}

Diagram genus_diagram(int genus) {
    if (genus < 0) throw std::invalid_argument("genus_diagram: genus must be >= 0");
    Diagram d;
    d.layers.push_back({Gen::Eta});
    for (int g = 0; g < genus; ++g) {
        d.layers.push_back({Gen::Delta});
        d.layers.push_back({Gen::Mu});
    }
    d.layers.push_back({Gen::Eps});
    d.in_arity = 0;
    d.out_arity = 0;
    return d;
}

}  // namespace frobrel
