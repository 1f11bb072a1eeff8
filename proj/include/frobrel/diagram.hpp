#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "frobrel/frobenius.hpp"

namespace frobrel {

// Generators of string-diagram words. Wires all carry the object's carrier;
// alpha exposes the nondegeneracy bijection as a wire operation.
enum class Gen { Id, Swap, Eta, Eps, Mu, Delta, Beta, Alpha };

struct Arity {
    int in = 0, out = 0;
};

Arity gen_arity(Gen g);
const char* gen_name(Gen g);

// A diagram is a vertical stack of layers, read top to bottom; each layer is
// a horizontal row of generators. Adjacent layers must have matching wire
// counts (checked at parse time).
struct Diagram {
    std::vector<std::vector<Gen>> layers;
    int in_arity = 0;
    int out_arity = 0;
};

struct DiagramParseError : std::runtime_error {
    explicit DiagramParseError(const std::string& msg, int layer = -1)
        : std::runtime_error(msg), layer_index(layer) {}
    int layer_index;  // 1-based, -1 when not tied to a layer
};

// Grammar: diagram := layer (';' layer)* ; layer := gen ('*' gen)* with
// optional parentheses around a layer; whitespace insensitive.
// Generators: id swap eta eps mu delta beta alpha.
Diagram parse_diagram(const std::string& src);

// Canonical text form; parse_diagram(render_diagram(d)) == d.
std::string render_diagram(const Diagram& d);

// Evaluates to a relation X^in -> X^out, where X^0 is the one-point set.
// Each layer is the monoidal product of its generators' relations; layers
// compose top to bottom.
Relation evaluate(const Diagram& d, const FrobObject& f);

// Semantic equality: evaluate both sides and compare exactly. Arity
// mismatch between d1 and d2 throws std::invalid_argument.
bool equal_diagrams(const Diagram& d1, const Diagram& d2, const FrobObject& f);

// The closed genus-g surface word: eta ; (delta ; mu)^g ; eps.
Diagram genus_diagram(int genus);

bool operator==(const Diagram& a, const Diagram& b);

}  // namespace frobrel
