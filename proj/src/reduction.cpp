#include "demazure/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace demazure {

ReductionData reduction_data(const RootDatum& d, const Weight& lambda, const WeylElt& w,
                             const FaceLabel& f) {
  if (!lambda.dominant())
    throw std::invalid_argument("reduction_data: highest weight must be dominant");
  if (!is_min_length_rep(f.v, f.eta))
    throw std::invalid_argument("reduction_data: v is not minimum-length for eta");

  ReductionData rd;
  rd.lambda = lambda;
  rd.w = w;
  rd.v = f.v;
  rd.eta = f.eta;
  rd.levi_simples = d.levi_subsystem(f.eta).simples;

  const WeylElt m = demazure_product(w.inverse(), f.v);  // w⁻¹*v = q⁻¹v
  const CosetDecomposition cd = coset_decompose(m, f.eta);
  rd.q = f.v * m.inverse();
  rd.u_L = cd.levi_part.inverse();
  rd.w_L = f.v * rd.u_L * f.v.inverse();
  rd.lambda_std = cd.min_rep.inverse().apply(lambda);
  rd.lambda_L = f.v.apply(rd.lambda_std);

  if (!bruhat_leq(rd.q, w)) throw std::logic_error("reduction_data: q ≰ w");
  if (!(rd.w_L.apply(rd.lambda_L) == rd.q.apply(lambda)))
    throw std::logic_error("reduction_data: w_L·λ_L ≠ q·λ");
  for (int j : rd.levi_simples)
    if (rd.lambda_std.coords[j - 1] < 0)
      throw std::logic_error("reduction_data: λ' not dominant for the Levi");
  for (int i : rd.u_L.word())
    if (std::find(rd.levi_simples.begin(), rd.levi_simples.end(), i) == rd.levi_simples.end())
      throw std::logic_error("reduction_data: u_L not in the Levi Weyl group");
  return rd;
}

Int levi_multiplicity(const RootDatum& d, const ReductionData& rd, const Weight& mu) {
  const DemazurePolytope p = DemazurePolytope::build(d, rd.lambda, rd.w);
  if (!p.contains(mu) || !p.on_face(mu, FaceLabel{rd.v, rd.eta}))
    throw std::invalid_argument("levi_multiplicity: weight not on the face");
  const Character ch = levi_demazure_character(d, rd.levi_simples, rd.lambda_std, rd.u_L);
  return ch.multiplicity(rd.v.inverse().apply(mu));
}

const Character& DemazureCache::character(const WeylElt& w) {
  auto it = characters_.find(w.canonical());
  if (it == characters_.end())
    it = characters_.emplace(w.canonical(), demazure_character(*datum_, lambda_, w)).first;
  return it->second;
}

const DemazurePolytope& DemazureCache::polytope(const WeylElt& w) {
  auto it = polytopes_.find(w.canonical());
  if (it == polytopes_.end())
    it = polytopes_.emplace(w.canonical(), DemazurePolytope::build(*datum_, lambda_, w)).first;
  return it->second;
}

const std::vector<Weight>& DemazureCache::lattice_points(const WeylElt& w) {
  auto it = lattices_.find(w.canonical());
  if (it == lattices_.end())
    it = lattices_.emplace(w.canonical(), polytope(w).lattice_points()).first;
  return it->second;
}

std::vector<std::size_t> VerificationReport::flags() const {
  std::vector<std::size_t> out = part1_flags;
  out.insert(out.end(), part2_flags.begin(), part2_flags.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationReport verify_theorem(DemazureCache& cache, const WeylElt& w, const FaceLabel& f) {
  const auto t0 = std::chrono::steady_clock::now();
  const RootDatum& d = cache.datum();
  const ReductionData rd = reduction_data(d, cache.lambda(), w, f);

  VerificationReport report;
  report.type = d.type();
  report.lambda = cache.lambda();
  report.w_word = w.word();
  report.v_word = f.v.word();
  report.q_word = rd.q.word();
  report.eta = f.eta;

  const DemazurePolytope& p = cache.polytope(w);
  const Rat value = p.face_value(f);
  const Coweight v_eta = f.v.apply(f.eta);
  const Character& ch_w = cache.character(w);
  const Character& ch_q = cache.character(rd.q);
  const Character ch_L = levi_demazure_character(d, rd.levi_simples, rd.lambda_std, rd.u_L);
  const WeylElt v_inv = f.v.inverse();

  for (const Weight& mu : cache.lattice_points(w)) {
    if (d.pair(mu, v_eta) != value) continue;
    VerificationRow row;
    row.mu = mu;
    row.m_w = ch_w.multiplicity(mu);
    row.m_q = ch_q.multiplicity(mu);
    row.m_L = ch_L.multiplicity(v_inv.apply(mu));
    const std::size_t idx = report.rows.size();
    if (row.m_L != row.m_q) report.part1_flags.push_back(idx);
    if (row.m_q != row.m_w) report.part2_flags.push_back(idx);
    report.rows.push_back(std::move(row));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

VerificationReport verify_theorem(const RootDatum& d, const Weight& lambda, const WeylElt& w,
                                  const FaceLabel& f) {
  DemazureCache cache(d, lambda);
  return verify_theorem(cache, w, f);
}

bool connecting_multiplicity_check(DemazureCache& cache, const WeylElt& w, const FaceLabel& f) {
  const RootDatum& d = cache.datum();
  if (!is_min_length_rep(f.v, f.eta))
    throw std::invalid_argument("connecting check: v is not minimum-length for eta");
  const WeylElt v_inv = f.v.inverse();
  const WeylElt u = demazure_product(v_inv, w);
  const DemazurePolytope& p = cache.polytope(w);
  const DemazurePolytope& pu = cache.polytope(u);
  const Rat value = p.face_value(f);
  const Coweight v_eta = f.v.apply(f.eta);
  const Character& ch_w = cache.character(w);
  const Character& ch_u = cache.character(u);
  const FaceLabel identity_face{WeylElt::identity(d), f.eta};

  for (const Weight& mu : cache.lattice_points(w)) {
    if (d.pair(mu, v_eta) != value) continue;
    const Weight nu = v_inv.apply(mu);
    if (ch_w.multiplicity(mu) != ch_u.multiplicity(nu)) return false;
    if (!pu.contains(nu) || !pu.on_face(nu, identity_face)) return false;
  }
  return true;
}

bool connecting_multiplicity_check(const RootDatum& d, const Weight& lambda, const WeylElt& w,
                                   const FaceLabel& f) {
  DemazureCache cache(d, lambda);
  return connecting_multiplicity_check(cache, w, f);
}

bool step_multiplicity_check(DemazureCache& cache, const WeylElt& w, int i, const Weight& mu) {
  const RootDatum& d = cache.datum();
  const DemazurePolytope& p = cache.polytope(w);
  bool found = false;
  for (const FaceLabel& f : p.faces_containing(mu)) {
    const WeylElt sv = WeylElt::from_word(d, {i}) * f.v;
    if (sv.length() < f.v.length()) {
      found = true;
      break;
    }
  }
  if (!found)
    throw std::invalid_argument(
        "step_multiplicity_check: no face F(v,η) with s_i v < v contains the weight");
  const WeylElt sw = demazure_product(WeylElt::from_word(d, {i}), w);
  return cache.character(w).multiplicity(mu) ==
         cache.character(sw).multiplicity(d.reflect(i, mu));
}

bool step_multiplicity_check(const RootDatum& d, const Weight& lambda, const WeylElt& w, int i,
                             const Weight& mu) {
  DemazureCache cache(d, lambda);
  return step_multiplicity_check(cache, w, i, mu);
}

bool inversion_positivity_check(const RootDatum& d, const ReductionData& rd) {
  (void)d;
  const WeylElt v_inv = rd.v.inverse();
  for (const Root& beta : inversion_set(rd.q.inverse()))
    if (!v_inv.apply(beta).positive()) return false;
  return true;
}

bool saturation_check(DemazureCache& cache, const WeylElt& w) {
  const Character& ch = cache.character(w);
  const std::vector<Weight>& pts = cache.lattice_points(w);
  if (ch.support_size() != pts.size()) return false;
  for (const Weight& mu : pts)
    if (ch.multiplicity(mu) == 0) return false;
  return true;
}

bool saturation_check(const RootDatum& d, const Weight& lambda, const WeylElt& w) {
  DemazureCache cache(d, lambda);
  return saturation_check(cache, w);
}

std::vector<Weight> weight_box(const RootDatum& d, Int max_coord) {
  std::vector<Weight> out;
  IntVec counter(d.rank(), 0);
  for (;;) {
    out.push_back(Weight{counter});
    int pos = 0;
    while (pos < d.rank() && ++counter[pos] > max_coord) counter[pos++] = 0;
    if (pos == d.rank()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace demazure
