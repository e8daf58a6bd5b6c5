#include "hamflat/operators.hpp"

namespace hamflat {

ConstantFormSpec::ConstantFormSpec(int n_, int l_, ConstSymMatrix eta_, ConstSymMatrix mu_,
                                   std::vector<Poly> psis_)
    : n(n_), l(l_), eta(std::move(eta_)), mu(std::move(mu_)), psis(std::move(psis_)) {
  if (n < 1 || l < 1) throw std::invalid_argument("ConstantFormSpec: N and L must be positive");
  if (eta.size() != n) throw std::invalid_argument("ConstantFormSpec: eta size != N");
  if (mu.size() != l) throw std::invalid_argument("ConstantFormSpec: mu size != L");
  if (static_cast<int>(psis.size()) != l)
    throw std::invalid_argument("ConstantFormSpec: psi count != L");
  for (const auto& p : psis)
    if (p.dim() != n) throw std::invalid_argument("ConstantFormSpec: psi dimension != N");
}

GeneralFormSpec::GeneralFormSpec(int n_, PolyMatrix g_, PolyTensor3 b_,
                                 std::vector<PolyMatrix> ws_, ConstSymMatrix mu_)
    : n(n_), l(static_cast<int>(ws_.size())), g(std::move(g_)), b(std::move(b_)),
      ws(std::move(ws_)), mu(std::move(mu_)) {
  if (n < 1) throw std::invalid_argument("GeneralFormSpec: N must be positive");
  if (g.rows() != n || g.cols() != n || g.dim() != n)
    throw std::invalid_argument("GeneralFormSpec: g must be N x N over N variables");
  if (b.size1() != n || b.size2() != n || b.size3() != n || b.dim() != n)
    throw std::invalid_argument("GeneralFormSpec: b must be N x N x N over N variables");
  if (mu.size() != l) throw std::invalid_argument("GeneralFormSpec: mu size != L");
  for (const auto& w : ws)
    if (w.rows() != n || w.cols() != n || w.dim() != n)
      throw std::invalid_argument("GeneralFormSpec: affinor must be N x N over N variables");
}

std::vector<PolyMatrix> hessian_affinors(const ConstantFormSpec& spec) {
  PolyMatrix eta = spec.eta.as_poly_matrix(spec.n);
  std::vector<PolyMatrix> ws;
  ws.reserve(static_cast<size_t>(spec.l));
  for (const auto& psi : spec.psis) ws.push_back(eta * hessian(psi));
  return ws;
}

VerificationReport check_ricci(const ConstantFormSpec& spec) {
  const int n = spec.n;
  PolyMatrix eta = spec.eta.as_poly_matrix(n);
  std::vector<PolyMatrix> hess;
  hess.reserve(static_cast<size_t>(spec.l));
  for (const auto& psi : spec.psis) hess.push_back(hessian(psi));

  CheckResult result{"ricci", true, {}};
  for (int a = 0; a < spec.l; ++a)
    for (int bb = a + 1; bb < spec.l; ++bb) {
      // H_a eta H_b - H_b eta H_a, entry (i, l)
      PolyMatrix lhs = hess[static_cast<size_t>(a)] * eta * hess[static_cast<size_t>(bb)];
      PolyMatrix res = lhs - lhs.transpose();
      for (int i = 0; i < n; ++i)
        for (int l2 = 0; l2 < n; ++l2)
          if (!res.at(i, l2).is_zero())
            result.record({a + 1, bb + 1, i + 1, l2 + 1}, res.at(i, l2));
    }
  VerificationReport report;
  report.checks.push_back(std::move(result));
  return report;
}

VerificationReport check_gauss(const ConstantFormSpec& spec) {
  const int n = spec.n;
  std::vector<PolyMatrix> hess;
  hess.reserve(static_cast<size_t>(spec.l));
  for (const auto& psi : spec.psis) hess.push_back(hessian(psi));

  CheckResult result{"gauss", true, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l2 = 0; l2 < n; ++l2) {
          Poly sum(n);
          for (int m = 0; m < spec.l; ++m)
            for (int nn = 0; nn < spec.l; ++nn) {
              const Rational& c = spec.mu.at(m, nn);
              if (c.is_zero()) continue;
              sum += c * (hess[static_cast<size_t>(m)].at(i, j) *
                              hess[static_cast<size_t>(nn)].at(k, l2) -
                          hess[static_cast<size_t>(m)].at(i, k) *
                              hess[static_cast<size_t>(nn)].at(j, l2));
            }
          if (!sum.is_zero()) result.record({i + 1, j + 1, k + 1, l2 + 1}, std::move(sum));
        }
  VerificationReport report;
  report.checks.push_back(std::move(result));
  return report;
}

VerificationReport verify_constant_form(const ConstantFormSpec& spec) {
  VerificationReport report = check_ricci(spec);
  VerificationReport gauss = check_gauss(spec);
  report.checks.insert(report.checks.end(), gauss.checks.begin(), gauss.checks.end());
  return report;
}

namespace {

// Both sides of relation (07); the left side is also the curvature tensor.
PolyTensor4 relation07_lhs(const GeneralFormSpec& spec) {
  const int n = spec.n;
  PolyTensor4 lhs(n, n, n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) {
          Poly sum(n);
          for (int s = 0; s < n; ++s) {
            sum += spec.g.at(i, s) *
                   (partial(spec.b.at(j, k, s), r + 1) - partial(spec.b.at(j, k, r), s + 1));
            sum += spec.b.at(i, j, s) * spec.b.at(s, k, r) -
                   spec.b.at(i, k, s) * spec.b.at(s, j, r);
          }
          lhs.at(i, j, k, r) = std::move(sum);
        }
  return lhs;
}

PolyTensor4 relation07_rhs(const GeneralFormSpec& spec) {
  const int n = spec.n;
  PolyTensor4 rhs(n, n, n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) {
          Poly sum(n);
          for (int m = 0; m < spec.l; ++m)
            for (int nn = 0; nn < spec.l; ++nn) {
              const Rational& c = spec.mu.at(m, nn);
              if (c.is_zero()) continue;
              const PolyMatrix& wm = spec.ws[static_cast<size_t>(m)];
              const PolyMatrix& wn = spec.ws[static_cast<size_t>(nn)];
              for (int s = 0; s < n; ++s)
                sum += c * spec.g.at(i, s) *
                       (wm.at(j, r) * wn.at(k, s) - wm.at(j, s) * wn.at(k, r));
            }
          rhs.at(i, j, k, r) = std::move(sum);
        }
  return rhs;
}

void record_tensor4(CheckResult& result, const PolyTensor4& t) {
  for (int i = 0; i < t.size1(); ++i)
    for (int j = 0; j < t.size2(); ++j)
      for (int k = 0; k < t.size3(); ++k)
        for (int l = 0; l < t.size4(); ++l)
          if (!t.at(i, j, k, l).is_zero())
            result.record({i + 1, j + 1, k + 1, l + 1}, t.at(i, j, k, l));
}

bool relations_01_03_pass(const GeneralFormSpec& spec) {
  VerificationReport report = verify_general_form(spec);
  return report.find("relation-01")->pass && report.find("relation-02")->pass &&
         report.find("relation-03")->pass;
}

}  // namespace

VerificationReport verify_general_form(const GeneralFormSpec& spec) {
  const int n = spec.n;
  VerificationReport report;

  CheckResult r01{"relation-01", true, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly res = spec.g.at(i, j) - spec.g.at(j, i);
      if (!res.is_zero()) r01.record({i + 1, j + 1}, std::move(res));
    }
  report.checks.push_back(std::move(r01));

  CheckResult r02{"relation-02", true, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Poly res = partial(spec.g.at(i, j), k + 1) - spec.b.at(i, j, k) - spec.b.at(j, i, k);
        if (!res.is_zero()) r02.record({i + 1, j + 1, k + 1}, std::move(res));
      }
  report.checks.push_back(std::move(r02));

  CheckResult r03{"relation-03", true, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Poly res(n);
        for (int s = 0; s < n; ++s)
          res += spec.g.at(i, s) * spec.b.at(j, k, s) - spec.g.at(j, s) * spec.b.at(i, k, s);
        if (!res.is_zero()) r03.record({i + 1, j + 1, k + 1}, std::move(res));
      }
  report.checks.push_back(std::move(r03));

  CheckResult r04{"relation-04", true, {}};
  for (int m = 0; m < spec.l; ++m) {
    const PolyMatrix& w = spec.ws[static_cast<size_t>(m)];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Poly res(n);
        for (int s = 0; s < n; ++s)
          res += spec.g.at(i, s) * w.at(j, s) - spec.g.at(j, s) * w.at(i, s);
        if (!res.is_zero()) r04.record({m + 1, i + 1, j + 1}, std::move(res));
      }
  }
  report.checks.push_back(std::move(r04));

  CheckResult r05{"relation-05", true, {}};
  for (int m = 0; m < spec.l; ++m)
    for (int nn = m + 1; nn < spec.l; ++nn) {
      PolyMatrix res =
          commutator(spec.ws[static_cast<size_t>(m)], spec.ws[static_cast<size_t>(nn)]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!res.at(i, j).is_zero())
            r05.record({m + 1, nn + 1, i + 1, j + 1}, res.at(i, j));
    }
  report.checks.push_back(std::move(r05));

  CheckResult r06{"relation-06", true, {}};
  for (int m = 0; m < spec.l; ++m) {
    const PolyMatrix& w = spec.ws[static_cast<size_t>(m)];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Poly res(n);
          for (int s = 0; s < n; ++s)
            for (int r = 0; r < n; ++r) {
              Poly dw = partial(w.at(k, r), s + 1);
              res += (spec.g.at(i, s) * spec.g.at(j, r) - spec.g.at(j, s) * spec.g.at(i, r)) * dw;
              res -= spec.g.at(j, r) * spec.b.at(i, k, s) * w.at(s, r);
              res += spec.g.at(i, r) * spec.b.at(j, k, s) * w.at(s, r);
            }
          if (!res.is_zero()) r06.record({m + 1, i + 1, j + 1, k + 1}, std::move(res));
        }
  }
  report.checks.push_back(std::move(r06));

  CheckResult r07{"relation-07", true, {}};
  PolyTensor4 lhs = relation07_lhs(spec);
  PolyTensor4 rhs = relation07_rhs(spec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) {
          Poly res = lhs.at(i, j, k, r) - rhs.at(i, j, k, r);
          if (!res.is_zero()) r07.record({i + 1, j + 1, k + 1, r + 1}, std::move(res));
        }
  report.checks.push_back(std::move(r07));

  return report;
}

PolyTensor4 curvature(const GeneralFormSpec& spec) {
  if (!relations_01_03_pass(spec))
    throw PreconditionError("curvature: relations (01)-(03) do not hold");
  return relation07_lhs(spec);
}

VerificationReport check_pencil(const GeneralFormSpec& spec) {
  if (!verify_general_form(spec).pass())
    throw PreconditionError("check_pencil: operator is not Hamiltonian");
  VerificationReport report;
  CheckResult flat{"pencil-curvature-zero", true, {}};
  record_tensor4(flat, relation07_lhs(spec));
  report.checks.push_back(std::move(flat));
  CheckResult tail{"pencil-nonlocal-zero", true, {}};
  record_tensor4(tail, relation07_rhs(spec));
  report.checks.push_back(std::move(tail));
  return report;
}

ConstantFormSpec constant_form_from_wdvv(const WdvvProblem& prob) {
  std::vector<Poly> psis = gradient(prob.phi);
  return ConstantFormSpec(prob.n, prob.n, prob.eta, prob.eta, std::move(psis));
}

GeneralFormSpec lower_to_general(const ConstantFormSpec& spec) {
  return GeneralFormSpec(spec.n, spec.eta.as_poly_matrix(spec.n),
                         PolyTensor3(spec.n, spec.n, spec.n, spec.n), hessian_affinors(spec),
                         spec.mu);
}

}  // namespace hamflat
