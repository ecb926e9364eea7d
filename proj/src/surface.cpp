#include "msurg/surface.hpp"

#include <map>
#include <stdexcept>

namespace msurg {

SurfaceCodeBundle build_surface_code(int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("build_surface_code: d must be odd and >= 3");
    const int w = 2 * d - 1;  // grid side, coordinates 0..2d-2

    std::map<std::pair<int, int>, std::size_t> qubit;
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j)
            if ((i + j) % 2 == 0) qubit[{i, j}] = qubit.size();

    CssCode code;
    code.n = qubit.size();

    auto star = [&](int i, int j) {
        PauliOperator p(code.n);
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            auto it = qubit.find({i + di[k], j + dj[k]});
            if (it != qubit.end()) p.x.set(it->second, true);
        }
        return p;
    };

    SurgeryInterface iface;
    // X-checks row-major so the chain along column j = 0 is contiguous in i.
    for (int i = 1; i < w; i += 2)
        for (int j = 0; j < w; j += 2) {
            code.x_checks.push_back(star(i, j));
            if (j == 0) iface.chain_check_ids.push_back(code.x_checks.size() - 1);
        }
    for (int i = 0; i < w; i += 2)
        for (int j = 1; j < w; j += 2) {
            PauliOperator p = star(i, j);
            std::swap(p.x, p.z);
            code.z_checks.push_back(p);
        }

    for (int i = 0; i < w; i += 2) iface.qubit_ids.push_back(qubit.at({i, 0}));

    PauliOperator lz(code.n), lx(code.n);
    for (int i = 0; i < w; i += 2) lz.z.set(qubit.at({i, 0}), true);
    for (int j = 0; j < w; j += 2) lx.x.set(qubit.at({0, j}), true);
    code.logical_z = {lz};
    code.logical_x = {lx};
    code.labels["family"] = "surface";
    code.labels["d"] = d;

    return {code, iface};
}

}  // namespace msurg
