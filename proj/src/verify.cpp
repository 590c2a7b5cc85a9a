#include "bzeta/verify.hpp"

#include "bzeta/bernoulli.hpp"
#include "bzeta/polylog.hpp"

#include <cmath>
#include <stdexcept>

namespace bzeta {
namespace {

constexpr double kPi = 3.14159265358979323846;

double horner(const std::vector<double>& asc, double t) {
    double v = 0.0;
    for (size_t i = asc.size(); i-- > 0;)
        v = v * t + asc[i];
    return v;
}

// Double-precision view of N(x)/(1+x)^e. Direct Horner below x = 1; above,
// evaluate in y = 1/x so large x never overflows the powers:
//   N(x)/(1+x)^e = H(y) y^{e-d} / (1+y)^e,  H(y) = sum_j c_{d-j} y^j.
// With divide_by_x the constant coefficient (always zero for these forms)
// is dropped first, giving N(x)/x exactly.
class LiEval {
public:
    LiEval(const RationalFunction& rf, bool divide_by_x) : e_(rf.denominator_exponent()) {
        const auto& c = rf.numerator();
        for (size_t i = divide_by_x ? 1 : 0; i < c.size(); ++i)
            asc_.push_back(c[i].to_double());
        desc_.assign(asc_.rbegin(), asc_.rend());
    }

    double operator()(double x) const {
        if (x <= 1.0)
            return horner(asc_, x) / std::pow(1.0 + x, e_);
        const double y = 1.0 / x;
        const int d = static_cast<int>(asc_.size()) - 1;
        return horner(desc_, y) * std::pow(y, e_ - d) / std::pow(1.0 + y, e_);
    }

private:
    std::vector<double> asc_, desc_;
    int e_;
};

RationalFunction li_form(int r) {
    StirlingTable table(std::max(r, 1));
    return polylog_stirling_form(r, table);
}

double inner_tol(double tol) { return std::max(tol / 16.0, 5e-14); }

VerificationReport finish(VerificationReport rep, const QuadratureResult& q, double estimate,
                          double tol) {
    rep.target = rep.float_factor * rep.exact_target.to_double();
    rep.estimate = estimate;
    rep.abs_err = std::fabs(estimate - rep.target);
    rep.tolerance = tol;
    rep.evaluations = q.evaluations;
    rep.converged = q.converged;
    rep.pass = rep.abs_err <= tol;
    return rep;
}

}  // namespace

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::Eq5: return "EQ5";
        case Identity::Eq6: return "EQ6";
        case Identity::Eq10: return "EQ10";
        case Identity::Eq11: return "EQ11";
    }
    throw std::logic_error("identity_name: bad enum");
}

VerificationReport verify_eq5(int r, double tol, long max_evaluations) {
    if (r < 0 || r > 10)
        throw std::invalid_argument("verify_eq5: requires 0 <= r <= 10");
    const LiEval li(li_form(r), false);
    auto f = [&li](double x) { return li(x) / (std::sqrt(x) * (1.0 + x)); };
    QuadratureResult q = integrate_zero_to_inf(f, inner_tol(tol), max_evaluations);

    const double prefactor = (BigRational(2) - pow2(-r)).to_double() * kPi;
    VerificationReport rep;
    rep.identity = (r == 0) ? Identity::Eq6 : Identity::Eq5;
    rep.r = r;
    rep.exact_target = zeta_neg_int(r);
    return finish(std::move(rep), q, q.estimate / prefactor, tol);
}

VerificationReport verify_eq10(int r, double tol, long max_evaluations) {
    if (r < 1 || r > 10)
        throw std::invalid_argument("verify_eq10: requires 1 <= r <= 10");
    const LiEval li_over_x(li_form(r), true);
    auto f = [&li_over_x](double x) { return li_over_x(x) / (1.0 + x); };
    QuadratureResult q = integrate_zero_to_inf(f, inner_tol(tol), max_evaluations);

    VerificationReport rep;
    rep.identity = Identity::Eq10;
    rep.r = r;
    rep.exact_target = zeta_neg_int(r - 1);
    return finish(std::move(rep), q, q.estimate / r, tol);
}

VerificationReport verify_eq11(int r, const BigRational& n, double tol, long max_evaluations) {
    if (r < 0 || r > 6)
        throw std::invalid_argument("verify_eq11: requires 0 <= r <= 6");
    if (!(BigRational(0) < n && n < BigRational(1)))
        throw std::invalid_argument("verify_eq11: requires 0 < n < 1");
    const LiEval li(li_form(r), false);
    const double n_minus_1 = n.to_double() - 1.0;
    auto f = [&li, n_minus_1](double x) { return std::pow(x, n_minus_1) * li(x) / (1.0 + x); };
    QuadratureResult q = integrate_zero_to_inf(f, inner_tol(tol), max_evaluations);

    VerificationReport rep;
    rep.identity = Identity::Eq11;
    rep.r = r;
    rep.n = n;
    rep.exact_target = zeta_neg_int(r) - hurwitz_zeta_neg_int(r, BigRational(1) - n);
    rep.float_factor = kPi / std::sin(n.to_double() * kPi);
    return finish(std::move(rep), q, q.estimate, tol);
}

std::vector<VerificationReport> run_suite(int max_r, double tol, long max_evaluations) {
    std::vector<VerificationReport> out;
    const int quad_cap = std::min(max_r, 10);
    for (int r = 0; r <= quad_cap; ++r)
        out.push_back(verify_eq5(r, tol, max_evaluations));
    for (int r = 1; r <= quad_cap; ++r)
        out.push_back(verify_eq10(r, tol, max_evaluations));
    const std::vector<BigRational> grid = {BigRational(1, 2), BigRational(1, 3),
                                           BigRational(1, 4)};
    for (int r = 0; r <= std::min(max_r, 6); ++r)
        for (const BigRational& n : grid)
            out.push_back(verify_eq11(r, n, tol, max_evaluations));
    return out;
}

}  // namespace bzeta
