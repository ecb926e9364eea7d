#include "msurg/color3d.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>

namespace msurg {

namespace {

constexpr std::array<char, 4> kColors = {'r', 'g', 'b', 'y'};

int color_index(char c) {
    switch (c) {
        case 'r': return 0;
        case 'g': return 1;
        case 'b': return 2;
        case 'y': return 3;
    }
    throw std::invalid_argument("bad color");
}

// Tetrahedron volume test on doubled integer coordinates.
int64_t det3(const std::array<std::array<int64_t, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

bool nondegenerate(const ColorComplex& c, const std::array<std::size_t, 4>& q) {
    std::array<std::array<int64_t, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = c.vertices[q[i]].coord2[j] - c.vertices[q[3]].coord2[j];
    return det3(m) != 0;
}

}  // namespace

std::size_t ColorComplex::outer_vertex(char color) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!vertices[i].inner && vertices[i].color == color) return i;
    throw std::logic_error("outer vertex missing");
}

ColorComplex build_complex(int l) {
    if (l < 1) throw std::invalid_argument("build_complex: l must be >= 1");
    ColorComplex cx;
    cx.l = l;

    // Inner bcc vertices: O_c + x*ihat + y*jhat + z*khat, x+y+z < l.
    // Doubled coordinates keep everything integral.
    const std::array<std::array<int64_t, 3>, 4> origin2 = {
        {{0, 0, 0}, {2, 0, 0}, {1, 1, 1}, {1, 1, -1}}};
    const std::array<int64_t, 3> ihat2 = {0, 2, 2}, jhat2 = {2, 0, 2}, khat2 = {2, 2, 0};
    for (int ci = 0; ci < 4; ++ci)
        for (int x = 0; x < l; ++x)
            for (int y = 0; x + y < l; ++y)
                for (int z = 0; x + y + z < l; ++z) {
                    ColorComplex::Vertex v;
                    for (int d = 0; d < 3; ++d)
                        v.coord2[d] = origin2[ci][d] + x * ihat2[d] + y * jhat2[d] + z * khat2[d];
                    v.color = kColors[ci];
                    v.inner = true;
                    cx.vertices.push_back(v);
                }
    std::sort(cx.vertices.begin(), cx.vertices.end(), [](const auto& a, const auto& b) {
        if (a.color != b.color) return color_index(a.color) < color_index(b.color);
        return a.coord2 < b.coord2;
    });
    const std::size_t n_inner = cx.vertices.size();

    // Inner adjacency: Euclidean distance <= 1 (doubled: squared distance <= 4).
    std::vector<std::vector<bool>> adj(n_inner + 4, std::vector<bool>(n_inner + 4, false));
    for (std::size_t i = 0; i < n_inner; ++i)
        for (std::size_t j = i + 1; j < n_inner; ++j) {
            int64_t d2 = 0;
            for (int d = 0; d < 3; ++d) {
                int64_t t = cx.vertices[i].coord2[d] - cx.vertices[j].coord2[d];
                d2 += t * t;
            }
            if (d2 <= 4) adj[i][j] = adj[j][i] = true;
        }

    // Inner tetrahedra (for boundary-triangle detection).
    std::vector<std::array<std::size_t, 4>> inner_tets;
    std::map<std::array<std::size_t, 3>, int> tri_tet_count;
    for (std::size_t i = 0; i < n_inner; ++i)
        for (std::size_t j = i + 1; j < n_inner; ++j) {
            if (!adj[i][j]) continue;
            for (std::size_t k = j + 1; k < n_inner; ++k) {
                if (!adj[i][k] || !adj[j][k]) continue;
                for (std::size_t m = k + 1; m < n_inner; ++m) {
                    if (!adj[i][m] || !adj[j][m] || !adj[k][m]) continue;
                    std::array<std::size_t, 4> q = {i, j, k, m};
                    if (!nondegenerate(cx, q)) continue;
                    inner_tets.push_back(q);
                    tri_tet_count[{i, j, k}]++;
                    tri_tet_count[{i, j, m}]++;
                    tri_tet_count[{i, k, m}]++;
                    tri_tet_count[{j, k, m}]++;
                }
            }
        }

    // A boundary triangle lies in exactly one inner tetrahedron; it is
    // assigned the one color its three vertices do not carry. The outer
    // vertex of color c is adjacent to every vertex of a c-colored
    // boundary triangle.
    std::array<std::set<std::size_t>, 4> face_vertices;
    for (const auto& [tri, cnt] : tri_tet_count) {
        if (cnt != 1) continue;
        std::set<char> seen;
        for (auto v : tri) seen.insert(cx.vertices[v].color);
        if (seen.size() != 3) throw std::logic_error("boundary triangle with repeated color");
        for (int ci = 0; ci < 4; ++ci)
            if (!seen.count(kColors[ci]))
                for (auto v : tri) face_vertices[ci].insert(v);
    }

    for (int ci = 0; ci < 4; ++ci) {
        ColorComplex::Vertex v;
        v.color = kColors[ci];
        v.inner = false;
        cx.vertices.push_back(v);
    }
    const std::size_t total = n_inner + 4;
    for (int ci = 0; ci < 4; ++ci) {
        std::size_t o = n_inner + ci;
        for (int cj = ci + 1; cj < 4; ++cj) adj[o][n_inner + cj] = adj[n_inner + cj][o] = true;
        for (auto v : face_vertices[ci]) adj[o][v] = adj[v][o] = true;
    }

    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = i + 1; j < total; ++j)
            if (adj[i][j]) {
                if (cx.vertices[i].color == cx.vertices[j].color)
                    throw std::logic_error("same-color edge in complex");
                cx.edges.push_back({i, j});
            }

    // Faces: 3-cliques. Tetrahedra: 4-cliques, excluding the all-outer one
    // and geometrically flat inner ones.
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = i + 1; j < total; ++j) {
            if (!adj[i][j]) continue;
            for (std::size_t k = j + 1; k < total; ++k) {
                if (!adj[i][k] || !adj[j][k]) continue;
                cx.faces.push_back({i, j, k});
                for (std::size_t m = k + 1; m < total; ++m) {
                    if (!adj[i][m] || !adj[j][m] || !adj[k][m]) continue;
                    std::array<std::size_t, 4> q = {i, j, k, m};
                    bool all_outer = i >= n_inner;
                    bool all_inner = m < n_inner;
                    if (all_outer) continue;
                    if (all_inner && !nondegenerate(cx, q)) continue;
                    cx.tetrahedra.push_back(q);
                }
            }
        }
    return cx;
}

namespace {

SurgeryInterface find_interface(const ColorComplex& cx, const CssCode& code) {
    const std::size_t o_r = cx.outer_vertex('r');
    const std::size_t o_b = cx.outer_vertex('b');

    // Interface qubits: tetrahedra containing the outer r-b edge.
    std::vector<std::size_t> qubits;
    std::set<std::size_t> chain_verts;
    for (std::size_t q = 0; q < cx.tetrahedra.size(); ++q) {
        const auto& t = cx.tetrahedra[q];
        bool has_r = false, has_b = false;
        for (auto v : t) {
            has_r |= (v == o_r);
            has_b |= (v == o_b);
        }
        if (!(has_r && has_b)) continue;
        qubits.push_back(q);
        for (auto v : t)
            if (cx.vertices[v].inner) chain_verts.insert(v);
    }

    // The tetrahedra around the r-b edge form a path: consecutive ones share
    // one inner (chain) vertex; the two endpoints additionally touch the
    // outer g / outer y vertex. Walk the path starting at the g end.
    std::map<std::size_t, std::vector<std::size_t>> tets_of;  // chain vertex -> qubits
    std::map<std::size_t, std::vector<std::size_t>> verts_of;  // qubit -> chain vertices
    for (auto q : qubits)
        for (auto v : cx.tetrahedra[q])
            if (chain_verts.count(v)) {
                tets_of[v].push_back(q);
                verts_of[q].push_back(v);
            }
    for (const auto& [v, ts] : tets_of)
        if (ts.size() != 2) throw std::logic_error("interface chain vertex degree != 2");

    const std::size_t o_g = cx.outer_vertex('g');
    std::size_t start = qubits.size();
    for (auto q : qubits) {
        bool has_g = false;
        for (auto v : cx.tetrahedra[q]) has_g |= (v == o_g);
        if (has_g) {
            if (verts_of[q].size() != 1 || start != qubits.size())
                throw std::logic_error("interface g-endpoint is not unique");
            start = q;
        }
    }
    if (start == qubits.size()) throw std::logic_error("interface g-endpoint missing");

    SurgeryInterface iface;
    std::set<std::size_t> used_verts;
    std::size_t cur = start;
    for (;;) {
        iface.qubit_ids.push_back(cur);
        std::size_t next_v = cx.vertices.size();
        for (auto v : verts_of[cur])
            if (!used_verts.count(v)) next_v = v;
        if (next_v == cx.vertices.size()) break;  // y endpoint reached
        used_verts.insert(next_v);
        // X-checks are indexed by inner vertex id, so the chain vertex id is
        // the check id.
        iface.chain_check_ids.push_back(next_v);
        cur = tets_of[next_v][tets_of[next_v][0] == cur ? 1 : 0];
    }
    if (iface.qubit_ids.size() != qubits.size())
        throw std::logic_error("interface path does not cover all edge tetrahedra");
    (void)code;
    return iface;
}

}  // namespace

ColorCodeBundle build_color_code(int l) {
    ColorCodeBundle bundle;
    bundle.complex = build_complex(l);
    const ColorComplex& cx = bundle.complex;

    CssCode code;
    code.n = cx.tetrahedra.size();
    const std::size_t expected_n = std::size_t(4 * l * l * l + 6 * l * l + 4 * l + 1);
    if (code.n != expected_n)
        throw std::runtime_error("color code: tetrahedron count mismatch");

    std::size_t n_inner = 0;
    for (const auto& v : cx.vertices)
        if (v.inner) ++n_inner;

    // X-check per inner vertex: all tetrahedra containing it.
    for (std::size_t v = 0; v < n_inner; ++v) {
        PauliOperator p(code.n);
        for (std::size_t q = 0; q < cx.tetrahedra.size(); ++q)
            for (auto w : cx.tetrahedra[q])
                if (w == v) p.x.set(q, true);
        code.x_checks.push_back(p);
    }
    // Z-check per non-boundary edge (every edge except outer-outer).
    for (const auto& e : cx.edges) {
        if (!cx.vertices[e[0]].inner && !cx.vertices[e[1]].inner) continue;
        PauliOperator p(code.n);
        for (std::size_t q = 0; q < cx.tetrahedra.size(); ++q) {
            bool a = false, b = false;
            for (auto w : cx.tetrahedra[q]) {
                a |= (w == e[0]);
                b |= (w == e[1]);
            }
            if (a && b) p.z.set(q, true);
        }
        code.z_checks.push_back(p);
    }

    bundle.interface = find_interface(cx, code);

    // Logical Z from the interface; logical X from generic extraction.
    PauliOperator lz(code.n);
    for (auto q : bundle.interface.qubit_ids) lz.z.set(q, true);
    auto reps = logical_representatives(code);
    code.logical_x = {reps.first[0]};
    code.logical_z = {lz};
    if (commutes(code.logical_x[0], code.logical_z[0]))
        throw std::runtime_error("color code: logical pairing failed");

    code.labels["family"] = "color3d";
    code.labels["l"] = l;
    bundle.code = code;
    return bundle;
}

nlohmann::json complex_to_json(const ColorComplex& c) {
    nlohmann::json j;
    j["l"] = c.l;
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : c.vertices) {
        nlohmann::json jv;
        jv["color"] = std::string(1, v.color);
        jv["inner"] = v.inner;
        if (v.inner)
            jv["coord2"] = {v.coord2[0], v.coord2[1], v.coord2[2]};
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    j["edges"] = c.edges;
    j["faces"] = c.faces;
    j["tetrahedra"] = c.tetrahedra;
    return j;
}

TransversalTResult transversal_t_exponent(const ColorCodeBundle& bundle) {
    const CssCode& code = bundle.code;
    if (code.n > 20) throw std::invalid_argument("transversal_t_exponent: dense budget exceeded");
    const std::size_t dim = std::size_t(1) << code.n;

    auto mask_of = [&](const BitVector& bits) {
        uint32_t m = 0;
        for (std::size_t i = 0; i < code.n; ++i)
            if (bits.get(i)) m |= uint32_t(1) << i;
        return m;
    };
    std::vector<uint32_t> xmasks;
    for (const auto& c : code.x_checks) xmasks.push_back(mask_of(c.x));
    uint32_t lx = mask_of(code.logical_x[0].x);

    // |0bar> = uniform over rowspace(H_X); |1bar> = X-bar shift.
    std::vector<uint32_t> zero_words;
    for (uint32_t s = 0; s < (uint32_t(1) << xmasks.size()); ++s) {
        uint32_t w = 0;
        for (std::size_t i = 0; i < xmasks.size(); ++i)
            if ((s >> i) & 1) w ^= xmasks[i];
        zero_words.push_back(w);
    }
    std::sort(zero_words.begin(), zero_words.end());
    zero_words.erase(std::unique(zero_words.begin(), zero_words.end()), zero_words.end());

    using cd = std::complex<double>;
    const double norm_half = 1.0 / std::sqrt(2.0 * double(zero_words.size()));
    std::vector<cd> target(dim, 0.0), plus(dim, 0.0);
    const cd t_phase = std::polar(1.0, M_PI / 4);
    for (uint32_t w : zero_words) {
        plus[w] = norm_half;
        plus[w ^ lx] = norm_half;
        target[w] = norm_half;
        target[w ^ lx] = norm_half * t_phase;
    }

    TransversalTResult best;
    for (int sign : {+1, -1}) {
        cd overlap = 0.0;
        for (uint32_t w : zero_words) {
            auto phase = [&](uint32_t idx) {
                return std::polar(1.0, sign * M_PI / 4 * double(std::popcount(idx)));
            };
            overlap += std::conj(target[w]) * plus[w] * phase(w);
            overlap += std::conj(target[w ^ lx]) * plus[w ^ lx] * phase(w ^ lx);
        }
        double ov = std::abs(overlap);
        if (ov >= 1.0 - 1e-10) {
            if (best.verified)
                throw std::runtime_error("both transversal T signs verify; construction bug");
            best = {sign, true, ov};
        }
    }
    if (!best.verified)
        throw std::runtime_error("neither transversal T sign verifies; construction bug");
    return best;
}

}  // namespace msurg
