#include "demazure/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace demazure {

DemazurePolytope DemazurePolytope::build(const RootDatum& d, const Weight& lambda,
                                         const WeylElt& w) {
  if (static_cast<int>(lambda.coords.size()) != d.rank())
    throw std::invalid_argument("build_polytope: dimension mismatch");
  if (!lambda.dominant())
    throw std::invalid_argument("build_polytope: highest weight must be dominant");

  DemazurePolytope p;
  p.datum_ = &d;
  p.lambda_ = lambda;
  p.w_ = w;

  for (const WeylElt& x : lower_interval(w)) p.vertices_.push_back(x.apply(lambda));
  std::sort(p.vertices_.begin(), p.vertices_.end());
  p.vertices_.erase(std::unique(p.vertices_.begin(), p.vertices_.end()), p.vertices_.end());

  const WeylElt w_inv = w.inverse();
  for (int i = 1; i <= d.rank(); ++i) {
    const Coweight xi = d.fundamental_coweight(i);
    for (const WeylElt& v : min_length_reps(d, xi)) {
      Inequality ineq;
      ineq.v = v;
      ineq.i = i;
      ineq.v_xi = v.apply(xi);
      ineq.rhs = d.pair(lambda, demazure_product(w_inv, v).apply(xi));
      p.inequalities_.push_back(std::move(ineq));
    }
  }
  return p;
}

bool DemazurePolytope::contains(const Weight& mu) const {
  for (const Inequality& ineq : inequalities_)
    if (datum_->pair(mu, ineq.v_xi) < ineq.rhs) return false;
  return true;
}

Rat DemazurePolytope::face_value(const FaceLabel& f) const {
  if (!is_min_length_rep(f.v, f.eta))
    throw std::invalid_argument("face label: v is not minimum-length for eta");
  const WeylElt m = demazure_product(w_.inverse(), f.v);
  return datum_->pair(lambda_, coset_decompose(m, f.eta).min_rep.apply(f.eta));
}

bool DemazurePolytope::on_face(const Weight& mu, const FaceLabel& f) const {
  if (!contains(mu))
    throw std::invalid_argument("on_face: weight lies outside the polytope");
  return datum_->pair(mu, f.v.apply(f.eta)) == face_value(f);
}

std::vector<FaceLabel> DemazurePolytope::faces_containing(const Weight& mu) const {
  std::vector<Coweight> etas;
  for (int i = 1; i <= datum_->rank(); ++i) etas.push_back(datum_->fundamental_coweight(i));
  return faces_containing(mu, etas);
}

std::vector<FaceLabel> DemazurePolytope::faces_containing(
    const Weight& mu, std::span<const Coweight> etas) const {
  std::vector<FaceLabel> out;
  for (const Coweight& eta : etas)
    for (const WeylElt& v : min_length_reps(*datum_, eta)) {
      FaceLabel f{v, eta};
      if (on_face(mu, f)) out.push_back(std::move(f));
    }
  return out;
}

std::vector<Weight> DemazurePolytope::lattice_points() const {
  const int n = datum_->rank();
  // Each vertex is λ - (nonnegative integer root combination); the maxima of
  // those combinations bound the scan box.
  IntVec bound(n, 0);
  for (const Weight& vtx : vertices_) {
    const RatVec c = datum_->simple_coords(lambda_ - vtx);
    for (int j = 0; j < n; ++j) {
      const Int cj = c[j].as_integer();
      if (cj < 0) throw std::logic_error("lattice_points: vertex above lambda");
      bound[j] = std::max(bound[j], cj);
    }
  }
  std::vector<Weight> out;
  IntVec counter(n, 0);
  for (;;) {
    Weight mu = lambda_;
    for (int j = 0; j < n; ++j)
      if (counter[j] != 0)
        for (int k = 0; k < n; ++k)
          mu.coords[k] -= counter[j] * datum_->cartan_matrix()[j][k];
    if (contains(mu)) out.push_back(std::move(mu));
    int pos = 0;
    while (pos < n && ++counter[pos] > bound[pos]) counter[pos++] = 0;
    if (pos == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> DemazurePolytope::face_lattice_points(const FaceLabel& f) const {
  const Rat value = face_value(f);
  const Coweight v_eta = f.v.apply(f.eta);
  std::vector<Weight> out;
  for (const Weight& mu : lattice_points())
    if (datum_->pair(mu, v_eta) == value) out.push_back(mu);
  return out;
}

}  // namespace demazure
