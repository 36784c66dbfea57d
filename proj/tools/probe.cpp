// Scratch probe used while developing; not installed.
#include <iostream>

#include "demazure/json_io.hpp"

using namespace demazure;

int main() {
  RootDatum d = RootDatum::from_string("B3");
  const Weight rho = d.rho();
  const WeylElt w = WeylElt::from_word(d, {1, 3, 2, 3, 1, 2, 3});
  const WeylElt v = WeylElt::from_word(d, {1});
  const Coweight x1 = d.fundamental_coweight(1);
  std::cout << "l(w)=" << w.length() << " w word=" << w.str() << "\n";

  const FaceLabel f{v, x1};
  const ReductionData rd = reduction_data(d, rho, w, f);
  std::cout << "q=" << rd.q.str() << "\n";
  std::cout << "w_L=" << rd.w_L.str() << " u_L=" << rd.u_L.str() << "\n";
  std::cout << "lambda_L=" << rd.lambda_L.str() << " lambda'=" << rd.lambda_std.str() << "\n";
  std::cout << "J={";
  for (int j : rd.levi_simples) std::cout << j << ",";
  std::cout << "}\n";

  const DemazurePolytope p = DemazurePolytope::build(d, rho, w);
  std::cout << "interval size=" << lower_interval(w).size()
            << " vertices=" << p.vertex_candidates().size() << "\n";
  for (const Weight& vv : p.vertex_candidates()) {
    std::cout << "  vert " << vv.str() << " eps=(";
    for (const Rat& r : d.ambient_coords(vv)) std::cout << r.str() << ",";
    std::cout << ")\n";
  }
  const Character ch = demazure_character(d, rho, w);
  std::cout << "ch support=" << ch.support_size() << " dim=" << ch.dimension() << "\n";
  auto face_pts = p.face_lattice_points(f);
  std::cout << "face points=" << face_pts.size() << "\n";
  for (const Weight& mu : face_pts) {
    std::cout << "  mu=" << mu.str() << " eps=(";
    for (const Rat& r : d.ambient_coords(mu)) std::cout << r.str() << ",";
    std::cout << ") mult=" << ch.multiplicity(mu) << "\n";
  }
  const VerificationReport rep = verify_theorem(d, rho, w, f);
  std::cout << "report rows=" << rep.rows.size() << " ok=" << rep.ok() << "\n";

  // lambda' pairings against α_2^∨, α_3^∨ and q lattice check
  std::cout << "lambda'_2=" << rd.lambda_std.coords[1] << " lambda'_3=" << rd.lambda_std.coords[2]
            << " len(u_L)=" << rd.u_L.length() << "\n";
  std::cout << "q==s3s2s3s1s2s3: "
            << (rd.q == WeylElt::from_word(d, {3, 2, 3, 1, 2, 3})) << "\n";
  std::cout << "qlambda eps=(";
  for (const Rat& r : d.ambient_coords(rd.q.apply(rho))) std::cout << r.str() << ",";
  std::cout << ")\n";
  std::cout << "lambda_L eps=(";
  for (const Rat& r : d.ambient_coords(rd.lambda_L)) std::cout << r.str() << ",";
  std::cout << ")\n";
  std::cout << "s2s3s2 rho eps=(";
  for (const Rat& r : d.ambient_coords(WeylElt::from_word(d, {2, 3, 2}).apply(rho)))
    std::cout << r.str() << ",";
  std::cout << ")\n";
  std::cout << "connecting=" << connecting_multiplicity_check(d, rho, w, f) << "\n";
  std::cout << "saturation=" << saturation_check(d, rho, w) << "\n";
  std::cout << "inversion_positivity=" << inversion_positivity_check(d, rd) << "\n";
  return 0;
}
// extra: interval of q
