#include "semihilbert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <optional>
#include <string>

#include "semihilbert/blockop.hpp"
#include "semihilbert/errors.hpp"
#include "semihilbert/linalg.hpp"
#include "semihilbert/rng.hpp"
#include "semihilbert/semiop.hpp"

namespace semihilbert {

namespace {

using R = Requirement;
using V = Variant;

class Eval;
using EvalFn = void (*)(Eval&);

struct Entry {
  BoundInfo info;
  EvalFn fn;
};

class Eval {
 public:
  Eval(const BoundInfo& info, const AContext& ctx, std::span<const ComplexMatrix> ops)
      : info_(info), ctx_(ctx), ops_(ops), digest_(operands_digest(ctx, ops)) {}

  const AContext& ctx() const { return ctx_; }
  const ComplexMatrix& op(std::size_t i) const { return ops_[i]; }
  std::size_t n() const { return ctx_.dim(); }
  ComplexMatrix id() const { return ComplexMatrix::identity(n()); }
  ComplexMatrix zero() const { return ComplexMatrix(n(), n()); }

  double norm(const ComplexMatrix& x) const { return a_op_norm(ctx_, x); }
  double omega(const ComplexMatrix& x) const { return a_numerical_radius(ctx_, x); }
  double radius(const ComplexMatrix& x) const { return a_spectral_radius(ctx_, x); }
  ComplexMatrix sh(const ComplexMatrix& x) const { return sharp(ctx_, x); }

  const BlockContext& block() {
    if (!block_) block_ = make_block_context(ctx_);
    return *block_;
  }
  double bnorm(const ComplexMatrix& x) { return a_op_norm(block().bbA, x); }
  double bomega(const ComplexMatrix& x) { return a_numerical_radius(block().bbA, x); }
  double bradius(const ComplexMatrix& x) { return a_spectral_radius(block().bbA, x); }

  void equality(std::string side, double lhs, double rhs, std::string notes = {}) {
    push(std::move(side), V::NotApplicable, lhs, rhs, -std::abs(lhs - rhs), std::move(notes));
  }
  void inequality(std::string side, double lhs, double rhs, V variant = V::NotApplicable,
                  std::string notes = {}) {
    push(std::move(side), variant, lhs, rhs, rhs - lhs, std::move(notes));
  }

  void fail(const std::string& what) const {
    throw Error(ErrorKind::PreconditionFailed, std::string(info_.id) + ": " + what);
  }

  std::vector<BoundReport> take() { return std::move(reports_); }

 private:
  void push(std::string side, V variant, double lhs, double rhs, double slack,
            std::string notes) {
    BoundReport r;
    r.bound_id = std::string(info_.id);
    r.variant = variant;
    r.side = std::move(side);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = slack;
    r.holds = within_policy(lhs, rhs, slack, ctx_.tol().bound_abs, ctx_.tol().bound_rel);
    r.asserted = std::find(info_.logged_only.begin(), info_.logged_only.end(), variant) ==
                 info_.logged_only.end();
    r.operands_digest = digest_;
    r.notes = std::move(notes);
    reports_.push_back(std::move(r));
  }

  const BoundInfo& info_;
  const AContext& ctx_;
  std::span<const ComplexMatrix> ops_;
  std::string digest_;
  std::optional<BlockContext> block_;
  std::vector<BoundReport> reports_;
};

double sq(double x) { return x * x; }

ComplexMatrix anti(const ComplexMatrix& q, const ComplexMatrix& r) {
  const ComplexMatrix z(q.rows(), q.cols());
  return block_matrix(z, q, r, z);
}

ComplexMatrix top(const ComplexMatrix& p, const ComplexMatrix& q) {
  const ComplexMatrix z(p.rows(), p.cols());
  return block_matrix(p, q, z, z);
}

// max{‖T+S‖², ‖T−S‖²}
double max_pm_sq(Eval& e, const ComplexMatrix& t, const ComplexMatrix& s) {
  return std::max(sq(e.norm(t + s)), sq(e.norm(t - s)));
}

double min_pm_sq(Eval& e, const ComplexMatrix& t, const ComplexMatrix& s) {
  return std::min(sq(e.norm(t + s)), sq(e.norm(t - s)));
}

// Equalities

void e_diez(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix ts = e.sh(t);
  const double n2 = sq(e.norm(t));
  e.equality("sharpT_T", e.norm(ts * t), n2);
  e.equality("T_sharpT", e.norm(t * ts), n2);
  e.equality("sharpT_sq", sq(e.norm(ts)), n2);
}

void e_at2(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const double residual = frobenius_norm(e.ctx().A() * t * t);
  if (residual > e.ctx().tol().member * frobenius_norm(e.ctx().A()) * sq(frobenius_norm(t))) {
    e.fail("operand T does not satisfy AT^2 = 0");
  }
  e.equality("", e.omega(t), 0.5 * e.norm(t));
}

void e_weak(Eval& e) {
  const ComplexMatrix& u = e.op(0);
  const ComplexMatrix& t = e.op(1);
  e.equality("", e.omega(e.sh(u) * t * u), e.omega(t));
}

void e_zm(Eval& e) {
  const AContext& ctx = e.ctx();
  const ComplexMatrix& t = e.op(0);
  // Re_A(e^{iθ}T) = cos θ·Re_A(T) − sin θ·Im_A(T), Im_A(e^{iθ}T) = cos θ·Im_A(T) + sin θ·Re_A(T);
  // compression is linear, so both sweeps run on two fixed compressed matrices.
  const ComplexMatrix cr = compress(ctx, re_a(ctx, t)).c;
  const ComplexMatrix ci = compress(ctx, im_a(ctx, t)).c;
  const Tolerances& tol = ctx.tol();
  ComplexMatrix work(cr.rows(), cr.cols());
  auto sweep = [&](const ComplexMatrix& x, const ComplexMatrix& y, double sign) {
    return theta_sweep_max(
               [&](double theta) {
                 const double c = std::cos(theta);
                 const double s = sign * std::sin(theta);
                 for (std::size_t k = 0; k < work.size(); ++k) {
                   work.data()[k] = c * x.data()[k] + s * y.data()[k];
                 }
                 return std::sqrt(std::max(0.0, max_eigenvalue_tridiagonal(work.adjoint() * work)));
               },
               tol.theta_grid, tol.golden_iters)
        .value;
  };
  const double re_sup = sweep(cr, ci, -1.0);
  const double im_sup = sweep(ci, cr, 1.0);
  const double omega = e.omega(t);
  e.equality("re_vs_radius", re_sup, omega);
  e.equality("im_vs_radius", im_sup, omega);
  e.equality("re_vs_im", re_sup, im_sup);
}

void e_aself(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const double norm = e.norm(t);
  e.equality("norm_vs_omega", norm, e.omega(t));
  e.equality("norm_vs_radius", norm, e.radius(t));
}

void e_commut(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& s = e.op(1);
  e.equality("", e.radius(t * s), e.radius(s * t));
}

void e_diagmax(Eval& e) {
  const ComplexMatrix& p = e.op(0);
  const ComplexMatrix& s = e.op(1);
  e.equality("", e.bomega(block_diagonal(p, s)), std::max(e.omega(p), e.omega(s)));
}

void e_normmax(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& s = e.op(1);
  const double m = std::max(e.norm(t), e.norm(s));
  e.equality("antidiagonal", e.bnorm(anti(t, s)), m);
  e.equality("diagonal", e.bnorm(block_diagonal(t, s)), m);
}

void e_lpos(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& s = e.op(1);
  e.equality("", e.bomega(anti(t, s)), 0.5 * e.norm(t + s));
}

void e_power(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const double norm = e.norm(t);
  ComplexMatrix power = t;
  for (int k = 2; k <= 5; ++k) {
    power = power * t;
    e.equality("n=" + std::to_string(k), e.norm(power), std::pow(norm, k));
  }
}

void e_sharpsharp(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& p = e.ctx().projR();
  e.equality("", frobenius_norm(e.sh(e.sh(t)) - p * t * p), 0.0, "Frobenius residual");
}

void e_prodsharp(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& s = e.op(1);
  e.equality("", frobenius_norm(e.sh(t * s) - e.sh(s) * e.sh(t)), 0.0, "Frobenius residual");
}

void e_omegasym(Eval& e) {
  const ComplexMatrix& p = e.op(0);
  const ComplexMatrix& q = e.op(1);
  const ComplexMatrix ps = e.sh(p);
  const ComplexMatrix qs = e.sh(q);
  e.equality("omega", e.omega(p * qs), e.omega(q * ps));
  e.equality("norm", e.norm(ps * q), e.norm(qs * p));
}

// Inequalities

void i_refine(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const double norm = e.norm(t);
  const double omega = e.omega(t);
  e.inequality("lower", 0.5 * norm, omega);
  e.inequality("upper", omega, norm);
}

ComplexMatrix full_block(Eval& e) { return block_matrix(e.op(0), e.op(1), e.op(2), e.op(3)); }

void i_pinch_d(Eval& e) {
  e.inequality("", e.bomega(block_diagonal(e.op(0), e.op(3))), e.bomega(full_block(e)));
}

void i_pinch_ad(Eval& e) {
  e.inequality("", e.bomega(anti(e.op(1), e.op(2))), e.bomega(full_block(e)));
}

void i_main(Eval& e) {
  const double w = e.bomega(full_block(e));
  const double wps = std::max(e.omega(e.op(0)), e.omega(e.op(3)));
  const double lambda1 = std::max(e.bomega(anti(e.op(1), e.op(2))), wps);
  const double lambda2 = 0.5 * (e.norm(e.op(1)) + e.norm(e.op(2))) + wps;
  e.inequality("lower", lambda1, w);
  e.inequality("upper", w, lambda2);
}

void i_thmf(Eval& e) {
  const ComplexMatrix& p = e.op(0);
  const ComplexMatrix& q = e.op(1);
  const ComplexMatrix& r = e.op(2);
  const ComplexMatrix& s = e.op(3);
  const double w = e.bomega(full_block(e));
  const ComplexMatrix id = e.id();
  const double top_term = e.norm(id + p * e.sh(p) + q * e.sh(q));
  const double bottom_term = e.norm(id + r * e.sh(r) + s * e.sh(s));
  const double wp = e.omega(p);
  e.inequality("", w, 0.5 * (wp + e.omega(q)) + 0.25 * (top_term + bottom_term), V::AsStated);
  e.inequality("", w, 0.5 * (wp + e.omega(s)) + 0.25 * (top_term + bottom_term), V::AsProved);
}

void i_normver(Eval& e) {
  const ComplexMatrix& p = e.op(0);
  const ComplexMatrix& q = e.op(1);
  const ComplexMatrix& r = e.op(2);
  const ComplexMatrix& s = e.op(3);
  const double rhs = 0.5 * (e.norm(p) + e.norm(s) + std::sqrt(e.norm(p * e.sh(p) + q * e.sh(q))) +
                            std::sqrt(e.norm(r * e.sh(r) + s * e.sh(s))));
  e.inequality("", e.bomega(full_block(e)), rhs);
}

void i_upper2(Eval& e) {
  const double wp = e.omega(e.op(0));
  const double ws = e.omega(e.op(3));
  const double nq = e.norm(e.op(1));
  const double nr = e.norm(e.op(2));
  const double rhs = std::sqrt(sq(wp) + 0.5 * nq * (wp + 0.5 * nq)) +
                     std::sqrt(sq(ws) + 0.5 * nr * (ws + 0.5 * nr));
  e.inequality("", e.bomega(full_block(e)), rhs);
}

void i_upper3(Eval& e) {
  const ComplexMatrix& p = e.op(0);
  const ComplexMatrix& q = e.op(1);
  const ComplexMatrix& r = e.op(2);
  const ComplexMatrix& s = e.op(3);
  const double rhs = std::sqrt(2.0 * sq(e.omega(p)) + 0.5 * (e.norm(e.sh(p) * q) + sq(e.norm(q)))) +
                     std::sqrt(2.0 * sq(e.omega(s)) + 0.5 * (e.norm(e.sh(s) * r) + sq(e.norm(r))));
  e.inequality("", e.bomega(full_block(e)), rhs);
}

void i_minmunu(Eval& e) {
  const ComplexMatrix& p = e.op(0);
  const ComplexMatrix& q = e.op(1);
  const ComplexMatrix& r = e.op(2);
  const ComplexMatrix& s = e.op(3);
  const double mu = std::sqrt(min_pm_sq(e, p, q) + 2.0 * e.omega(p * e.sh(q))) +
                    std::sqrt(min_pm_sq(e, r, s) + 2.0 * e.omega(s * e.sh(r)));
  const double nu = std::sqrt(min_pm_sq(e, p, r) + 2.0 * e.omega(e.sh(p) * r)) +
                    std::sqrt(min_pm_sq(e, q, s) + 2.0 * e.omega(e.sh(s) * q));
  e.inequality("", e.bomega(full_block(e)), std::min(mu, nu));
}

void i_lm5(Eval& e) {
  const double rhs = spectral_radius_2x2_nonneg(e.norm(e.op(0)), e.norm(e.op(1)),
                                                e.norm(e.op(2)), e.norm(e.op(3)));
  e.inequality("", e.bradius(full_block(e)), rhs);
}

void i_456(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& s = e.op(1);
  const ComplexMatrix ts = e.sh(t);
  const ComplexMatrix ss = e.sh(s);
  const double m = max_pm_sq(e, t, s);
  e.inequality("", m - e.norm(t * ts + s * ss), 2.0 * e.omega(t * ss), V::AsStated);
  e.inequality("", m - e.norm(ts * t + ss * s), 2.0 * e.omega(ss * t), V::AsProved);
}

void i_eq109(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& s = e.op(1);
  e.inequality("", e.norm(t - s), std::max(e.norm(t), e.norm(s)));
}

void i_fin(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& s = e.op(1);
  const ComplexMatrix ts = e.sh(t);
  e.inequality("", 2.0 * e.norm(ts * s), e.norm(t * ts + s * e.sh(s)));
}

void i_ffii(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& s = e.op(1);
  const ComplexMatrix ts = e.sh(t);
  const ComplexMatrix ss = e.sh(s);
  const double plus = sq(e.norm(t + s));
  const double minus = sq(e.norm(t - s));
  const double inner_max =
      std::max({e.norm(t * t + s * s), e.norm(ts * t + ss * s), e.norm(t * ts + s * ss)});
  e.inequality("", 0.5 * std::abs(plus - minus) + inner_max, std::max(plus, minus));
}

void i_last(Eval& e) {
  const ComplexMatrix& p = e.op(0);
  const ComplexMatrix& q = e.op(1);
  const double radicand = max_pm_sq(e, p, q) - 2.0 * e.omega(p * e.sh(q));
  std::string notes;
  if (radicand < 0.0) notes = "negative radicand " + std::to_string(radicand) + " clamped to 0";
  e.inequality("", 0.5 * std::sqrt(std::max(radicand, 0.0)), e.bomega(top(p, q)), V::NotApplicable,
               std::move(notes));
}

void i_cor(Eval& e) {
  const ComplexMatrix& p = e.op(0);
  const ComplexMatrix& q = e.op(1);
  const ComplexMatrix& a = e.ctx().A();
  const ComplexMatrix qs = e.sh(q);
  const double residual = frobenius_norm(a * p * qs);
  if (residual > e.ctx().tol().member * frobenius_norm(a) * frobenius_norm(p) * frobenius_norm(qs)) {
    e.fail("operands do not satisfy APQ# = 0");
  }
  const double plus = e.norm(p + q);
  const double minus = e.norm(p - q);
  const double w = e.bomega(top(p, q));
  e.inequality("lower", 0.5 * std::max(plus, minus), w);
  e.inequality("upper", w, std::min(plus, minus));
}

void i_nonneg(Eval& e) {
  const ComplexMatrix& p = e.op(0);
  const ComplexMatrix& q = e.op(1);
  e.inequality("", 0.0, max_pm_sq(e, p, q) - 2.0 * e.omega(p * e.sh(q)));
}

void i_lem5norm(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix& s = e.op(1);
  const ComplexMatrix diff = t - s;
  const double scale = std::max(1.0, frobenius_norm(e.ctx().A() * diff));
  if (a_positivity_margin(e.ctx(), diff) < -e.ctx().tol().psd * scale) {
    e.fail("operands do not satisfy T - S >=_A 0");
  }
  e.inequality("", e.norm(s), e.norm(t));
}

void i_posss(Eval& e) {
  const ComplexMatrix& t = e.op(0);
  const ComplexMatrix t2 = t * t;
  ComplexMatrix power = t2;
  for (int k = 1; k <= 3; ++k) {
    if (k > 1) power = power * t2;
    e.inequality("n=" + std::to_string(k), 0.0, a_positivity_margin(e.ctx(), power),
                 V::NotApplicable, "rhs is the least eigenvalue of A*T^(2n)");
  }
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    const auto eq = BoundKind::Equality;
    const auto in = BoundKind::Inequality;
    const std::vector<V> na{V::NotApplicable};
    const std::vector<V> both{V::AsStated, V::AsProved};
    const std::vector<std::string_view> t{"T"};
    const std::vector<std::string_view> ts{"T", "S"};
    const std::vector<std::string_view> pq{"P", "Q"};
    const std::vector<std::string_view> pqrs{"P", "Q", "R", "S"};
    const std::vector<R> bnd4(4, R::ABounded);
    const std::vector<R> adj4(4, R::AAdjointable);
    const std::vector<R> adj2(2, R::AAdjointable);
    const std::vector<R> bnd2(2, R::ABounded);
    return std::vector<Entry>{
        {{"E-DIEZ", eq, t, {R::AAdjointable}, "",
          "||T#T||_A = ||TT#||_A = ||T||_A^2 = ||T#||_A^2", na, {}},
         e_diez},
        {{"E-AT2", eq, t, {R::ABounded}, "AT^2 = 0", "omega_A(T) = ||T||_A / 2", na, {}}, e_at2},
        {{"E-WEAK", eq, {"U", "T"}, {R::AUnitary, R::ABounded}, "",
          "omega_A(U#TU) = omega_A(T) for A-unitary U", na, {}},
         e_weak},
        {{"E-ZM", eq, t, {R::AAdjointable}, "",
          "omega_A(T) = sup_theta ||Re_A(e^{i theta}T)||_A = sup_theta ||Im_A(e^{i theta}T)||_A",
          na, {}},
         e_zm},
        {{"E-ASELF", eq, t, {R::ASelfadjoint}, "", "||T||_A = omega_A(T) = r_A(T) for AT = T*A",
          na, {}},
         e_aself},
        {{"E-COMMUT", eq, ts, bnd2, "", "r_A(TS) = r_A(ST)", na, {}}, e_commut},
        {{"E-DIAGMAX", eq, {"P", "S"}, bnd2, "",
          "omega_AA(diag(P, S)) = max{omega_A(P), omega_A(S)}", na, {}},
         e_diagmax},
        {{"E-NORMMAX", eq, ts, bnd2, "",
          "||(0 T; S 0)||_AA = ||diag(T, S)||_AA = max{||T||_A, ||S||_A}", na, {}},
         e_normmax},
        {{"E-LPOS", eq, ts, {R::APositive, R::APositive}, "",
          "omega_AA((0 T; S 0)) = ||T + S||_A / 2 for A-positive T, S", na, {}},
         e_lpos},
        {{"E-POWER", eq, t, {R::ASelfadjoint}, "", "||T^n||_A = ||T||_A^n, n = 2..5", na, {}},
         e_power},
        {{"E-SHARPSHARP", eq, t, {R::AAdjointable}, "", "(T#)# = P_R T P_R", na, {}},
         e_sharpsharp},
        {{"E-PRODSHARP", eq, ts, adj2, "", "(TS)# = S#T#", na, {}}, e_prodsharp},
        {{"E-OMEGASYM", eq, pq, adj2, "",
          "omega_A(PQ#) = omega_A(QP#) and ||P#Q||_A = ||Q#P||_A", na, {}},
         e_omegasym},

        {{"I-REFINE", in, t, {R::ABounded}, "", "||T||_A / 2 <= omega_A(T) <= ||T||_A", na, {}},
         i_refine},
        {{"I-PINCH-D", in, pqrs, bnd4, "", "omega_AA(diag(P, S)) <= omega_AA((P Q; R S))", na, {}},
         i_pinch_d},
        {{"I-PINCH-AD", in, pqrs, bnd4, "", "omega_AA((0 Q; R 0)) <= omega_AA((P Q; R S))", na,
          {}},
         i_pinch_ad},
        {{"I-MAIN", in, pqrs, bnd4, "",
          "l1 <= omega_AA((P Q; R S)) <= l2, l1 = max{omega_AA((0 Q; R 0)), omega_A(P), "
          "omega_A(S)}, l2 = (||Q||_A + ||R||_A)/2 + max{omega_A(P), omega_A(S)}",
          na, {}},
         i_main},
        {{"I-THMF", in, pqrs, adj4, "",
          "omega_AA((P Q; R S)) <= (omega_A(P) + omega_A(X))/2 + (||I + PP# + QQ#||_A + "
          "||I + RR# + SS#||_A)/4; as_stated X = Q, as_proved X = S",
          both, {V::AsStated}},
         i_thmf},
        {{"I-NORMVER", in, pqrs, adj4, "",
          "omega_AA((P Q; R S)) <= (||P||_A + ||S||_A + ||PP# + QQ#||_A^(1/2) + "
          "||RR# + SS#||_A^(1/2))/2",
          na, {}},
         i_normver},
        {{"I-UPPER2", in, pqrs, adj4, "",
          "omega_AA((P Q; R S)) <= sqrt(omega_A(P)^2 + ||Q||_A(omega_A(P) + ||Q||_A/2)/2) + "
          "sqrt(omega_A(S)^2 + ||R||_A(omega_A(S) + ||R||_A/2)/2)",
          na, {}},
         i_upper2},
        {{"I-UPPER3", in, pqrs, adj4, "",
          "omega_AA((P Q; R S)) <= sqrt(2 omega_A(P)^2 + (||P#Q||_A + ||Q||_A^2)/2) + "
          "sqrt(2 omega_A(S)^2 + (||S#R||_A + ||R||_A^2)/2)",
          na, {}},
         i_upper3},
        {{"I-MINMUNU", in, pqrs, adj4, "",
          "omega_AA((P Q; R S)) <= min{mu, nu}, mu = sqrt(min{||P+-Q||_A^2} + 2 omega_A(PQ#)) + "
          "sqrt(min{||R+-S||_A^2} + 2 omega_A(SR#)), nu = sqrt(min{||P+-R||_A^2} + "
          "2 omega_A(P#R)) + sqrt(min{||Q+-S||_A^2} + 2 omega_A(S#Q))",
          na, {}},
         i_minmunu},
        {{"I-LM5", in, pqrs, bnd4, "",
          "r_AA((P Q; R S)) <= r([[||P||_A, ||Q||_A], [||R||_A, ||S||_A]])", na, {}},
         i_lm5},
        {{"I-456", in, ts, adj2, "",
          "max{||T+S||_A^2, ||T-S||_A^2} - ||X||_A <= 2 omega_A(Y); as_stated X = TT# + SS#, "
          "Y = TS#; as_proved X = T#T + S#S, Y = S#T",
          both, {V::AsStated}},
         i_456},
        {{"I-EQ109", in, ts, {R::APositive, R::APositive}, "",
          "||T - S||_A <= max{||T||_A, ||S||_A} for A-positive T, S", na, {}},
         i_eq109},
        {{"I-FIN", in, ts, adj2, "", "2||T#S||_A <= ||TT# + SS#||_A", na, {}}, i_fin},
        {{"I-FFII", in, ts, adj2, "",
          "| ||T+S||_A^2 - ||T-S||_A^2 |/2 + max{||T^2 + S^2||_A, ||T#T + S#S||_A, "
          "||TT# + SS#||_A} <= max{||T+S||_A^2, ||T-S||_A^2}",
          na, {}},
         i_ffii},
        {{"I-LAST", in, pq, adj2, "",
          "sqrt(max{||P+Q||_A^2, ||P-Q||_A^2} - 2 omega_A(PQ#))/2 <= omega_AA((P Q; 0 0))", na,
          {}},
         i_last},
        {{"I-COR", in, pq, adj2, "APQ# = 0",
          "max{||P+Q||_A, ||P-Q||_A}/2 <= omega_AA((P Q; 0 0)) <= min{||P+Q||_A, ||P-Q||_A}",
          na, {}},
         i_cor},
        {{"I-NONNEG", in, pq, adj2, "", "max{||P+Q||_A^2, ||P-Q||_A^2} - 2 omega_A(PQ#) >= 0", na,
          {}},
         i_nonneg},
        {{"I-LEM5NORM", in, ts, {R::ASelfadjoint, R::ASelfadjoint}, "T - S >=_A 0",
          "||S||_A <= ||T||_A", na, {}},
         i_lem5norm},
        {{"I-POSSS", in, t, {R::ASelfadjoint}, "",
          "T^(2n) >=_A 0, n = 1..3 (least eigenvalue of A*T^(2n) is nonnegative)", na, {}},
         i_posss},
    };
  }();
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const Entry& e : registry()) {
    if (e.info.id == id) return e;
  }
  throw Error(ErrorKind::ConfigError, "unknown bound id '" + std::string(id) + "'");
}

void check_requirements(const BoundInfo& info, const AContext& ctx,
                        std::span<const ComplexMatrix> ops) {
  if (ops.size() != info.operand_names.size()) {
    throw Error(ErrorKind::PreconditionFailed,
                std::string(info.id) + ": expected " + std::to_string(info.operand_names.size()) +
                    " operands, got " + std::to_string(ops.size()));
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const ComplexMatrix& x = ops[i];
    if (x.rows() != ctx.dim() || x.cols() != ctx.dim()) {
      throw Error(ErrorKind::PreconditionFailed,
                  std::string(info.id) + ": operand " + std::string(info.operand_names[i]) +
                      " has the wrong shape");
    }
    bool ok = is_a_bounded(ctx, x);
    switch (info.requirements[i]) {
      case R::ABounded:
        break;
      case R::AAdjointable:
        ok = ok && is_a_adjointable(ctx, x);
        break;
      case R::ASelfadjoint:
        ok = ok && is_a_selfadjoint(ctx, x);
        break;
      case R::APositive:
        ok = ok && is_a_positive(ctx, x);
        break;
      case R::AUnitary:
        ok = ok && is_a_unitary(ctx, x);
        break;
    }
    if (!ok) {
      throw Error(ErrorKind::PreconditionFailed,
                  std::string(info.id) + ": operand " + std::string(info.operand_names[i]) +
                      " is not " + std::string(to_string(info.requirements[i])));
    }
  }
}

std::vector<BoundReport> run(const Entry& entry, const AContext& ctx,
                             std::span<const ComplexMatrix> ops) {
  check_requirements(entry.info, ctx, ops);
  Eval e(entry.info, ctx, ops);
  entry.fn(e);
  return e.take();
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::NotApplicable:
      return "n/a";
    case Variant::AsStated:
      return "as_stated";
    case Variant::AsProved:
      return "as_proved";
  }
  return "?";
}

std::string_view to_string(BoundKind k) {
  return k == BoundKind::Equality ? "equality" : "inequality";
}

std::string_view to_string(Requirement r) {
  switch (r) {
    case Requirement::ABounded:
      return "A-bounded";
    case Requirement::AAdjointable:
      return "A-adjointable";
    case Requirement::ASelfadjoint:
      return "A-selfadjoint";
    case Requirement::APositive:
      return "A-positive";
    case Requirement::AUnitary:
      return "A-unitary";
  }
  return "?";
}

const std::vector<BoundInfo>& list_bounds() {
  static const std::vector<BoundInfo> infos = [] {
    std::vector<BoundInfo> out;
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const BoundInfo& find_bound(std::string_view id) { return find_entry(id).info; }

bool within_policy(double lhs, double rhs, double slack, double tol_abs, double tol_rel) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs) || !std::isfinite(slack)) return false;
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return slack >= -(tol_abs + tol_rel * scale);
}

std::string operands_digest(const AContext& ctx, std::span<const ComplexMatrix> operands) {
  auto feed = [](std::uint64_t h, const ComplexMatrix& m) {
    const auto data = m.data();
    return fnv1a(std::string_view(reinterpret_cast<const char*>(data.data()),
                                  data.size() * sizeof(Complex)),
                 h);
  };
  std::uint64_t h = feed(fnv1a(""), ctx.A());
  for (const ComplexMatrix& m : operands) h = feed(h, m);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<BoundReport> eval_equality(std::string_view id, const AContext& ctx,
                                       std::span<const ComplexMatrix> operands) {
  const Entry& entry = find_entry(id);
  if (entry.info.kind != BoundKind::Equality) {
    throw Error(ErrorKind::ConfigError, std::string(id) + " is not an equality");
  }
  return run(entry, ctx, operands);
}

std::vector<BoundReport> eval_inequality(std::string_view id, const AContext& ctx,
                                         std::span<const ComplexMatrix> operands) {
  const Entry& entry = find_entry(id);
  if (entry.info.kind != BoundKind::Inequality) {
    throw Error(ErrorKind::ConfigError, std::string(id) + " is not an inequality");
  }
  return run(entry, ctx, operands);
}

std::vector<BoundReport> eval_bound(std::string_view id, const AContext& ctx,
                                    std::span<const ComplexMatrix> operands) {
  return run(find_entry(id), ctx, operands);
}

}  // namespace semihilbert
