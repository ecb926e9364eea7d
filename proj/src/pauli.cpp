#include "msurg/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace msurg {

PauliOperator PauliOperator::identity(std::size_t n) { return PauliOperator(n); }

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char kind) {
    PauliOperator p(n);
    switch (kind) {
        case 'X': p.x.set(q, true); break;
        case 'Z': p.z.set(q, true); break;
        case 'Y':
            p.x.set(q, true);
            p.z.set(q, true);
            p.phase = 1;  // Y = i XZ
            break;
        default: throw std::invalid_argument("single: kind must be X, Y or Z");
    }
    return p;
}

PauliOperator PauliOperator::from_x_bits(const BitVector& xs) {
    PauliOperator p(xs.size());
    p.x = xs;
    return p;
}

PauliOperator PauliOperator::from_z_bits(const BitVector& zs) {
    PauliOperator p(zs.size());
    p.z = zs;
    return p;
}

std::size_t PauliOperator::weight() const {
    BitVector u = x;
    u.xor_with(z);
    // support = x OR z = (x^z) plus (x&z)
    std::size_t both = 0;
    for (std::size_t i = 0; i < x.words().size(); ++i)
        both += std::size_t(std::popcount(x.words()[i] & z.words()[i]));
    return u.popcount() + both;
}

bool PauliOperator::is_hermitian() const {
    std::size_t ycount = 0;
    for (std::size_t i = 0; i < x.words().size(); ++i)
        ycount += std::size_t(std::popcount(x.words()[i] & z.words()[i]));
    return ((phase - int(ycount)) % 2 + 2) % 2 == 0;
}

int PauliOperator::sign() const {
    std::size_t ycount = 0;
    for (std::size_t i = 0; i < x.words().size(); ++i)
        ycount += std::size_t(std::popcount(x.words()[i] & z.words()[i]));
    int k = ((phase - int(ycount % 4)) % 4 + 4) % 4;
    if (k == 0) return 1;
    if (k == 2) return -1;
    throw std::logic_error("sign() on non-Hermitian Pauli");
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    if (p.n != q.n) throw std::invalid_argument("commutes: size mismatch");
    return !(p.x.dot(q.z) ^ p.z.dot(q.x));
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    if (p.n != q.n) throw std::invalid_argument("multiply: size mismatch");
    PauliOperator r(p.n);
    // Moving each Z of p past each X of q costs a factor (-1).
    std::size_t swaps = 0;
    for (std::size_t i = 0; i < p.z.words().size(); ++i)
        swaps += std::size_t(std::popcount(p.z.words()[i] & q.x.words()[i]));
    r.x = p.x;
    r.x.xor_with(q.x);
    r.z = p.z;
    r.z.xor_with(q.z);
    r.phase = (p.phase + q.phase + 2 * int(swaps % 2)) % 4;
    return r;
}

std::string to_string(const PauliOperator& p) {
    std::size_t ycount = 0;
    for (std::size_t i = 0; i < p.x.words().size(); ++i)
        ycount += std::size_t(std::popcount(p.x.words()[i] & p.z.words()[i]));
    int k = ((p.phase - int(ycount % 4)) % 4 + 4) % 4;
    static const char* prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[k];
    for (std::size_t q = 0; q < p.n; ++q) {
        bool xb = p.x.get(q), zb = p.z.get(q);
        s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
}

PauliOperator pauli_from_string(const std::string& s) {
    std::size_t i = 0;
    int k = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        k = (s[i] == '-') ? 2 : 0;
        ++i;
        if (i < s.size() && s[i] == 'i') {
            k += 1;
            ++i;
        }
    }
    PauliOperator p(s.size() - i);
    std::size_t ycount = 0;
    for (std::size_t q = 0; i < s.size(); ++i, ++q) {
        switch (s[i]) {
            case 'I': break;
            case 'X': p.x.set(q, true); break;
            case 'Z': p.z.set(q, true); break;
            case 'Y':
                p.x.set(q, true);
                p.z.set(q, true);
                ++ycount;
                break;
            default: throw std::invalid_argument("bad Pauli letter");
        }
    }
    p.phase = int((k + ycount) % 4);
    return p;
}

}  // namespace msurg
