// Command-line front end: characters, polytopes, faces, reduction data,
// verification sweeps and saturation scans, with JSON / table / plot-data
// output. Exit codes: 0 success (and verified), 1 verification failure,
// 2 usage or input error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "demazure/json_io.hpp"

namespace dz = demazure;
using nlohmann::json;

namespace {

struct CommonArgs {
  std::string type;
  std::string lambda_csv;
  std::string word_csv;
  std::string format = "json";
  std::string output;
};

std::vector<dz::Int> parse_int_csv(const std::string& csv) {
  std::vector<dz::Int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse integer '" + item + "'");
    }
  return out;
}

std::vector<int> parse_word(const std::string& csv) {
  std::vector<int> out;
  for (dz::Int v : parse_int_csv(csv)) out.push_back(static_cast<int>(v));
  return out;
}

dz::Coweight parse_coweight(const std::string& csv) {
  dz::Coweight c;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) c.coords.push_back(dz::Rat::parse(item));
  return c;
}

std::vector<dz::CartanType> parse_types(const std::string& csv) {
  std::vector<dz::CartanType> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(dz::CartanType::parse(item));
  return out;
}

void emit(const CommonArgs& args, const json& doc, const std::string& table) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output);
    if (!file) throw std::invalid_argument("cannot open output file " + args.output);
    os = &file;
  }
  if (args.format == "table")
    *os << table;
  else
    *os << doc.dump(2) << "\n";
}

std::string character_table(const dz::RootDatum& d, const dz::Character& ch) {
  std::ostringstream os;
  os << "# " << d.type().str() << " character, " << ch.support_size() << " weights, dimension "
     << ch.dimension() << "\n";
  for (const auto& [coords, mult] : ch.terms())
    os << "  " << dz::Weight{coords}.str() << "  " << mult << "\n";
  return os.str();
}

int cmd_character(const CommonArgs& args) {
  const dz::RootDatum d = dz::RootDatum::from_string(args.type);
  const dz::Weight lambda{parse_int_csv(args.lambda_csv)};
  const dz::WeylElt w = dz::WeylElt::from_word(d, parse_word(args.word_csv));
  const dz::Character ch = dz::demazure_character(d, lambda, w);
  emit(args, dz::character_to_json(d, ch), character_table(d, ch));
  return 0;
}

int cmd_polytope(const CommonArgs& args, bool with_character) {
  const dz::RootDatum d = dz::RootDatum::from_string(args.type);
  const dz::Weight lambda{parse_int_csv(args.lambda_csv)};
  const dz::WeylElt w = dz::WeylElt::from_word(d, parse_word(args.word_csv));
  const dz::DemazurePolytope p = dz::DemazurePolytope::build(d, lambda, w);

  dz::Character ch;
  if (with_character) ch = dz::demazure_character(d, lambda, w);

  if (args.format == "plotdata") {
    const auto pts = with_character ? p.lattice_points() : p.vertex_candidates();
    emit(args, dz::plotdata_to_json(d, pts, with_character ? &ch : nullptr), "");
    return 0;
  }
  std::ostringstream table;
  table << "# " << d.type().str() << " polytope, lambda=" << lambda.str() << ", w=" << w.str()
        << "\n# " << p.vertex_candidates().size() << " vertex candidates, "
        << p.inequalities().size() << " inequalities\n";
  for (const dz::Weight& v : p.vertex_candidates()) table << "  vertex " << v.str() << "\n";
  if (with_character)
    for (const dz::Weight& mu : p.lattice_points())
      table << "  point " << mu.str() << "  mult " << ch.multiplicity(mu) << "\n";
  emit(args, dz::polytope_to_json(p, with_character ? &ch : nullptr), table.str());
  return 0;
}

int cmd_face(const CommonArgs& args, const std::string& v_csv, const std::string& eta_csv,
             const std::string& mu_csv) {
  const dz::RootDatum d = dz::RootDatum::from_string(args.type);
  const dz::Weight lambda{parse_int_csv(args.lambda_csv)};
  const dz::WeylElt w = dz::WeylElt::from_word(d, parse_word(args.word_csv));
  const dz::DemazurePolytope p = dz::DemazurePolytope::build(d, lambda, w);

  if (!mu_csv.empty()) {
    const dz::Weight mu{parse_int_csv(mu_csv)};
    json labels = json::array();
    std::ostringstream table;
    for (const dz::FaceLabel& f : p.faces_containing(mu)) {
      labels.push_back(json{{"v_word", f.v.word()}, {"eta", f.eta.str()}});
      table << "  face v=" << f.v.str() << " eta=" << f.eta.str() << "\n";
    }
    emit(args,
         json{{"schema", dz::kSchema},
              {"kind", "face_labels"},
              {"type", d.type().str()},
              {"mu", mu.coords},
              {"labels", labels}},
         table.str());
    return 0;
  }

  if (eta_csv.empty()) throw std::invalid_argument("face: --eta (or --mu) is required");
  const dz::FaceLabel f{dz::WeylElt::from_word(d, parse_word(v_csv)), parse_coweight(eta_csv)};
  const dz::Character ch = dz::demazure_character(d, lambda, w);
  const auto pts = p.face_lattice_points(f);
  if (args.format == "plotdata") {
    emit(args, dz::plotdata_to_json(d, pts, &ch), "");
    return 0;
  }
  json jpts = json::array();
  std::ostringstream table;
  table << "# face v=" << f.v.str() << " eta=" << f.eta.str() << ": " << pts.size()
        << " lattice weights\n";
  for (const dz::Weight& mu : pts) {
    jpts.push_back(json{{"weight", mu.coords}, {"mult", ch.multiplicity(mu)}});
    table << "  " << mu.str() << "  mult " << ch.multiplicity(mu) << "\n";
  }
  emit(args,
       json{{"schema", dz::kSchema},
            {"kind", "face"},
            {"type", d.type().str()},
            {"lambda", lambda.coords},
            {"word", w.word()},
            {"v_word", f.v.word()},
            {"eta", f.eta.str()},
            {"points", jpts}},
       table.str());
  return 0;
}

// Exhaustive verification: all w ∈ W, fundamental η, v ∈ W^η, λ in the box.
int run_reduce_sweep(const CommonArgs& args, const std::string& types_csv, dz::Int max_coord) {
  long faces = 0, empty_faces = 0, flags = 0, weights = 0;
  json flagged = json::array();
  for (const dz::CartanType& t : parse_types(types_csv)) {
    const dz::RootDatum d(t);
    const auto elements = dz::all_elements(d);
    std::vector<std::vector<dz::WeylElt>> reps;
    for (int i = 1; i <= d.rank(); ++i)
      reps.push_back(dz::min_length_reps(d, d.fundamental_coweight(i)));
    for (const dz::Weight& lambda : dz::weight_box(d, max_coord)) {
      dz::DemazureCache cache(d, lambda);
      for (const dz::WeylElt& w : elements)
        for (int i = 1; i <= d.rank(); ++i)
          for (const dz::WeylElt& v : reps[i - 1]) {
            const dz::FaceLabel f{v, d.fundamental_coweight(i)};
            const dz::VerificationReport rep = dz::verify_theorem(cache, w, f);
            ++faces;
            if (rep.rows.empty()) ++empty_faces;
            weights += static_cast<long>(rep.rows.size());
            if (!rep.ok()) {
              ++flags;
              flagged.push_back(dz::report_to_json(rep));
            }
          }
    }
  }
  json doc{{"schema", dz::kSchema},   {"kind", "reduce_sweep"}, {"faces", faces},
           {"empty_faces", empty_faces}, {"weights", weights},  {"flags", flags},
           {"flagged_instances", flagged}};
  std::ostringstream table;
  table << "# sweep: " << faces << " faces (" << empty_faces << " empty), " << weights
        << " weights, " << flags << " flags\n";
  emit(args, doc, table.str());
  return flags == 0 ? 0 : 1;
}

int cmd_reduce(const CommonArgs& args, const std::string& v_csv, const std::string& eta_csv,
               const std::string& sweep_csv, dz::Int max_coord) {
  if (!sweep_csv.empty()) return run_reduce_sweep(args, sweep_csv, max_coord);
  if (eta_csv.empty()) throw std::invalid_argument("reduce: --eta (or --sweep) is required");
  const dz::RootDatum d = dz::RootDatum::from_string(args.type);
  const dz::Weight lambda{parse_int_csv(args.lambda_csv)};
  const dz::WeylElt w = dz::WeylElt::from_word(d, parse_word(args.word_csv));
  const dz::FaceLabel f{dz::WeylElt::from_word(d, parse_word(v_csv)), parse_coweight(eta_csv)};
  const dz::ReductionData rd = dz::reduction_data(d, lambda, w, f);
  const dz::VerificationReport rep = dz::verify_theorem(d, lambda, w, f);
  json doc{{"schema", dz::kSchema},
           {"kind", "reduce"},
           {"reduction", dz::reduction_to_json(d, rd)},
           {"report", dz::report_to_json(rep)}};
  std::ostringstream table;
  table << "# q=" << rd.q.str() << "\n# w_L=" << rd.w_L.str() << "  lambda_L=" << rd.lambda_L.str()
        << "\n# u_L=" << rd.u_L.str() << "  lambda'=" << rd.lambda_std.str() << "\n# "
        << rep.rows.size() << " face weights, " << rep.flags().size() << " flags\n";
  for (const auto& row : rep.rows)
    table << "  " << row.mu.str() << "  m_w=" << row.m_w << " m_q=" << row.m_q
          << " m_L=" << row.m_L << "\n";
  emit(args, doc, table.str());
  return rep.ok() ? 0 : 1;
}

int cmd_saturation(const CommonArgs& args, const std::string& sweep_csv, dz::Int max_coord) {
  json failures = json::array();
  std::ostringstream table;
  bool all_ok = true;
  long instances = 0;
  if (!sweep_csv.empty()) {
    for (const dz::CartanType& t : parse_types(sweep_csv)) {
      const dz::RootDatum d(t);
      const auto elements = dz::all_elements(d);
      for (const dz::Weight& lambda : dz::weight_box(d, max_coord)) {
        dz::DemazureCache cache(d, lambda);
        for (const dz::WeylElt& w : elements) {
          ++instances;
          if (!dz::saturation_check(cache, w)) {
            all_ok = false;
            failures.push_back(
                json{{"type", t.str()}, {"lambda", lambda.coords}, {"word", w.word()}});
          }
        }
      }
      table << "# " << t.str() << ": swept\n";
    }
  } else {
    const dz::RootDatum d = dz::RootDatum::from_string(args.type);
    const dz::Weight lambda{parse_int_csv(args.lambda_csv)};
    const dz::WeylElt w = dz::WeylElt::from_word(d, parse_word(args.word_csv));
    ++instances;
    all_ok = dz::saturation_check(d, lambda, w);
    if (!all_ok)
      failures.push_back(json{{"type", d.type().str()}, {"lambda", lambda.coords}, {"word", w.word()}});
  }
  table << "# " << instances << " instances, all_saturated=" << (all_ok ? "true" : "false") << "\n";
  emit(args,
       json{{"schema", dz::kSchema},
            {"kind", "saturation"},
            {"instances", instances},
            {"all_saturated", all_ok},
            {"failures", failures}},
       table.str());
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure characters, weight polytopes and the face reduction rule"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string v_csv, eta_csv, mu_csv, sweep_csv;
  dz::Int max_coord = 2;
  bool with_character = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("type", args.type, "Cartan type, e.g. B3");
    sub->add_option("--lambda", args.lambda_csv, "highest weight, comma-separated ω coordinates");
    sub->add_option("--word", args.word_csv, "word for w, comma-separated 1-based indices");
    sub->add_option("--format", args.format, "json | table | plotdata")
        ->check(CLI::IsMember({"json", "table", "plotdata"}));
    sub->add_option("--output", args.output, "write to file instead of stdout");
  };

  CLI::App* character = app.add_subcommand("character", "Demazure character ch(V_λ^w)");
  add_common(character);

  CLI::App* polytope = app.add_subcommand("polytope", "Demazure weight polytope P_λ^w");
  add_common(polytope);
  polytope->add_flag("--with-character", with_character, "join lattice points with multiplicities");

  CLI::App* face = app.add_subcommand("face", "face F(v,η): lattice weights or containing labels");
  add_common(face);
  face->add_option("--v-word", v_csv, "word for v ∈ W^η");
  face->add_option("--eta", eta_csv, "dominant coweight, comma-separated rationals");
  face->add_option("--mu", mu_csv, "instead: list faces containing this weight");

  CLI::App* reduce = app.add_subcommand("reduce", "reduction data + theorem verification");
  add_common(reduce);
  reduce->add_option("--v-word", v_csv, "word for v ∈ W^η");
  reduce->add_option("--eta", eta_csv, "dominant coweight");
  reduce->add_option("--sweep", sweep_csv, "comma-separated types to sweep exhaustively");
  reduce->add_option("--max-coord", max_coord, "sweep bound on λ coordinates");

  CLI::App* saturation = app.add_subcommand("saturation", "support vs lattice point scan");
  add_common(saturation);
  saturation->add_option("--sweep", sweep_csv, "comma-separated types to sweep");
  saturation->add_option("--max-coord", max_coord, "sweep bound on λ coordinates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (character->parsed()) return cmd_character(args);
    if (polytope->parsed()) return cmd_polytope(args, with_character);
    if (face->parsed()) return cmd_face(args, v_csv, eta_csv, mu_csv);
    if (reduce->parsed()) return cmd_reduce(args, v_csv, eta_csv, sweep_csv, max_coord);
    if (saturation->parsed()) return cmd_saturation(args, sweep_csv, max_coord);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
