#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "msurg/css.hpp"
#include "msurg/surgery.hpp"

namespace msurg {

// 4-colorable 3D simplicial complex: an inner bcc-lattice tetrahedron of
// scale l plus four outer boundary vertices, one per color.
struct ColorComplex {
    struct Vertex {
        std::array<int64_t, 3> coord2{};  // doubled coordinates (half-integer lattice)
        char color = '?';                 // one of r, g, b, y
        bool inner = false;
    };
    int l = 0;
    std::vector<Vertex> vertices;
    std::vector<std::array<std::size_t, 2>> edges;
    std::vector<std::array<std::size_t, 3>> faces;
    std::vector<std::array<std::size_t, 4>> tetrahedra;

    std::size_t outer_vertex(char color) const;
};

struct ColorCodeBundle {
    ColorComplex complex;
    CssCode code;            // qubits = tetrahedra, X-checks = inner vertices,
                             // Z-checks = non-boundary edges
    SurgeryInterface interface;  // boundary logical-Z interface (outer r-b edge)
};

ColorComplex build_complex(int l);
ColorCodeBundle build_color_code(int l);

nlohmann::json complex_to_json(const ColorComplex& c);

// Determines the sign a such that applying T^a to every physical qubit of
// the l=1 code implements logical T on the code space (dense 15-qubit check).
struct TransversalTResult {
    int sign = 0;
    bool verified = false;
    double overlap = 0.0;
};
TransversalTResult transversal_t_exponent(const ColorCodeBundle& bundle);

}  // namespace msurg
