#include "parasurf/veech.hpp"

#include "parasurf/errors.hpp"

namespace parasurf {

GroupWord word_reduce(const std::string& letters, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("word sign must be +1 or -1");
    std::string stack;
    for (char ch : letters) {
        if (ch != 'a' && ch != 'b' && ch != 'c')
            throw DomainError(std::string("invalid generator letter '") + ch + "'");
        if (!stack.empty() && stack.back() == ch)
            stack.pop_back(); // involution: xx = identity
        else
            stack.push_back(ch);
    }
    return {std::move(stack), sign};
}

GroupWord parse_word(const std::string& text) {
    if (!text.empty() && text[0] == '-') return word_reduce(text.substr(1), -1);
    return word_reduce(text, 1);
}

std::string word_str(const GroupWord& w) {
    return (w.sign < 0 ? "-" : "") + w.letters;
}

GroupWord concat(const GroupWord& lhs, const GroupWord& rhs) {
    return word_reduce(lhs.letters + rhs.letters, lhs.sign * rhs.sign);
}

namespace {
PolyMatrix generator_image(char ch) {
    Poly c = Poly::variable();
    Poly one(Rat(1)), two(Rat(2));
    switch (ch) {
    case 'a': return {-one, Poly(), Poly(), one};
    case 'b': return {-one, two, Poly(), one};
    case 'c': return {-c, c - one, -c - one, c};
    }
    throw DomainError("invalid generator letter");
}
} // namespace

PolyMatrix rho(const GroupWord& w) {
    PolyMatrix m = PolyMatrix::identity();
    for (char ch : w.letters) m = m.mul(generator_image(ch));
    if (w.sign < 0) m = -m;
    return m;
}

RatMat rho_at(const GroupWord& w, const Rat& at) {
    PolyMatrix m = rho(w);
    return {m.a.eval(at), m.b.eval(at), m.c.eval(at), m.d.eval(at)};
}

bool is_hyperbolic(const GroupWord& w) {
    RatMat m = rho_at(w, Rat(1));
    Rat tr = m.trace(), dt = m.det();
    if (dt == 1) return tr > 2 || tr < -2;
    return tr != 0; // determinant -1
}

PolyVec act_vec(const GroupWord& w, const PolyVec& v) { return rho(w).apply(v); }

AbsClass act(const GroupWord& w, const AbsClass& s) {
    // The representation is upper triangular at parameter -1, so the
    // obstruction functional is preserved up to scale; abs_class re-checks.
    return abs_class(act_vec(w, s.hvec));
}

PolyVec act_power_vec(const GroupWord& w, const PolyVec& v, long n) {
    return pmat_pow(rho(w), n).apply(v);
}

AbsClass act_power(const GroupWord& w, const AbsClass& s, long n) {
    return abs_class(act_power_vec(w, s.hvec, n));
}

} // namespace parasurf
