#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "envlab/field.hpp"
#include "envlab/monomial.hpp"

namespace envlab {

/// Dense homogeneous polynomial: coefficient vector indexed by
/// monomial_basis(nvars, degree). The zero form keeps its nominal degree.
class HomogeneousForm {
public:
    HomogeneousForm() : nvars_(0), degree_(0) {}

    HomogeneousForm(int nvars, int degree)
        : nvars_(nvars), degree_(degree),
          coeffs_(static_cast<std::size_t>(monomial_count(nvars, degree)), 0) {}

    HomogeneousForm(int nvars, int degree, std::vector<Scalar> coeffs)
        : nvars_(nvars), degree_(degree), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<std::size_t>(monomial_count(nvars, degree)))
            throw MathError("coefficient vector length does not match the monomial basis");
    }

    static HomogeneousForm zero(int nvars, int degree) { return HomogeneousForm(nvars, degree); }

    static HomogeneousForm one(int nvars) {
        HomogeneousForm f(nvars, 0);
        f.coeffs_[0] = 1;
        return f;
    }

    static HomogeneousForm variable(int nvars, int index, Scalar coeff = 1) {
        HomogeneousForm f(nvars, 1);
        f.coeffs_[static_cast<std::size_t>(index)] = coeff;
        return f;
    }

    static HomogeneousForm term(int nvars, const Monomial& m, Scalar coeff) {
        HomogeneousForm f(nvars, monomial_degree(m));
        f.coeffs_[monomial_rank(m)] = coeff;
        return f;
    }

    static HomogeneousForm random(const PrimeField& F, Rng& rng, int nvars, int degree) {
        HomogeneousForm f(nvars, degree);
        for (auto& c : f.coeffs_) c = rng.scalar(F);
        return f;
    }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    std::vector<Scalar>& coeffs() { return coeffs_; }

    Scalar coeff(const Monomial& m) const { return coeffs_[monomial_rank(m)]; }

    void set_coeff(const Monomial& m, Scalar c) { coeffs_[monomial_rank(m)] = c; }

    bool is_zero() const {
        for (Scalar c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const HomogeneousForm& o) const {
        return nvars_ == o.nvars_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

private:
    int nvars_;
    int degree_;
    std::vector<Scalar> coeffs_;
};

inline HomogeneousForm form_add(const PrimeField& F, const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars() != b.nvars() || a.degree() != b.degree())
        throw MathError("form_add: mismatched degree or variable count");
    HomogeneousForm r = a;
    for (std::size_t i = 0; i < r.coeffs().size(); ++i)
        r.coeffs()[i] = F.add(r.coeffs()[i], b.coeffs()[i]);
    return r;
}

inline HomogeneousForm form_sub(const PrimeField& F, const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars() != b.nvars() || a.degree() != b.degree())
        throw MathError("form_sub: mismatched degree or variable count");
    HomogeneousForm r = a;
    for (std::size_t i = 0; i < r.coeffs().size(); ++i)
        r.coeffs()[i] = F.sub(r.coeffs()[i], b.coeffs()[i]);
    return r;
}

inline HomogeneousForm form_scale(const PrimeField& F, const HomogeneousForm& a, Scalar c) {
    HomogeneousForm r = a;
    for (auto& x : r.coeffs()) x = F.mul(x, c);
    return r;
}

inline HomogeneousForm form_mul(const PrimeField& F, const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars() != b.nvars()) throw MathError("form_mul: mismatched variable count");
    const int nvars = a.nvars();
    HomogeneousForm r(nvars, a.degree() + b.degree());
    const auto& basis_a = monomial_basis_cached(nvars, a.degree());
    const auto& basis_b = monomial_basis_cached(nvars, b.degree());
    Monomial prod(nvars);
    for (std::size_t i = 0; i < basis_a.size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < basis_b.size(); ++j) {
            if (b.coeffs()[j] == 0) continue;
            for (int v = 0; v < nvars; ++v) prod[v] = basis_a[i][v] + basis_b[j][v];
            const auto idx = monomial_rank(prod);
            r.coeffs()[idx] = F.add(r.coeffs()[idx], F.mul(a.coeffs()[i], b.coeffs()[j]));
        }
    }
    return r;
}

inline Scalar form_eval(const PrimeField& F, const HomogeneousForm& f, const std::vector<Scalar>& point) {
    if (static_cast<int>(point.size()) != f.nvars())
        throw MathError("form_eval: point length does not match variable count");
    const auto& basis = monomial_basis_cached(f.nvars(), f.degree());
    Scalar total = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        Scalar v = f.coeffs()[i];
        for (int k = 0; k < f.nvars(); ++k) {
            if (basis[i][k] > 0) v = F.mul(v, F.pow(point[k], static_cast<std::uint64_t>(basis[i][k])));
        }
        total = F.add(total, v);
    }
    return total;
}

inline HomogeneousForm form_partial(const PrimeField& F, const HomogeneousForm& f, int var) {
    if (f.degree() < 1) throw MathError("form_partial: degree must be at least 1");
    HomogeneousForm r(f.nvars(), f.degree() - 1);
    const auto& basis = monomial_basis_cached(f.nvars(), f.degree());
    Monomial m(f.nvars());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (f.coeffs()[i] == 0 || basis[i][var] == 0) continue;
        m = basis[i];
        const Scalar c = F.mul(f.coeffs()[i], F.reduce(m[var]));
        m[var] -= 1;
        const auto idx = monomial_rank(m);
        r.coeffs()[idx] = F.add(r.coeffs()[idx], c);
    }
    return r;
}

/// The three partial derivatives of a ternary form.
inline std::array<HomogeneousForm, 3> form_partials(const PrimeField& F, const HomogeneousForm& f) {
    if (f.nvars() != 3) throw MathError("form_partials: expects a form in 3 variables");
    return {form_partial(F, f, 0), form_partial(F, f, 1), form_partial(F, f, 2)};
}

} // namespace envlab
