#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "matos/coloration.hpp"
#include "matos/families.hpp"
#include "matos/json_io.hpp"
#include "matos/os_algebra.hpp"
#include "matos/resonance.hpp"
#include "matos/tutte.hpp"

namespace {

using nlohmann::json;
using namespace matos;

// Exit codes: 0 success, 1 mathematical verification failure, 2 usage or
// input error.
struct VerifyFailure : std::runtime_error {
  explicit VerifyFailure(const std::string& what) : std::runtime_error(what) {}
};

std::vector<Rat> parse_lambda(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  if (out.empty()) throw std::invalid_argument("empty lambda");
  return out;
}

void emit(bool as_json, const std::string& text, const json& mirror) {
  if (as_json)
    std::cout << mirror.dump(2) << "\n";
  else
    std::cout << text;
}

int run_gen(const std::string& family, const std::string& out_path, const std::string& matrix_path,
            bool as_json) {
  Generated gen = generate(family);
  json j = matroid_to_json(gen.matroid);
  if (!out_path.empty())
    write_json_file(out_path, j);
  else
    std::cout << j.dump(2) << "\n";
  if (!matrix_path.empty()) {
    if (!gen.realization) throw std::invalid_argument("family " + family + " has no stored realization");
    write_json_file(matrix_path, quad_matrix_to_json(*gen.realization));
  }
  if (!out_path.empty() && !as_json) {
    std::cout << "wrote " << gen.matroid.name() << " (n=" << gen.matroid.n() << ", rank=" << gen.matroid.rank()
              << ") to " << out_path << "\n";
  }
  return 0;
}

int run_tutte(const std::string& file, const std::vector<std::string>& eval_at, bool as_json) {
  Matroid m = read_matroid_file(file);
  BivariatePoly t = tutte(m);
  if (!eval_at.empty()) {
    Rat x = parse_rat(eval_at.at(0));
    Rat y = parse_rat(eval_at.at(1));
    Rat value = t.eval(x, y);
    emit(as_json, rat_to_string(value) + "\n",
         json{{"x", rat_to_string(x)}, {"y", rat_to_string(y)}, {"value", rat_to_string(value)}});
  } else {
    emit(as_json, t.to_string() + "\n", json{{"tutte", t.to_string()}});
  }
  return 0;
}

int run_charpoly(const std::string& file, bool as_json) {
  Matroid m = read_matroid_file(file);
  UnivariatePoly chi = char_poly(m);
  emit(as_json, chi.to_string() + "\n", json{{"charpoly", chi.to_string()}});
  return 0;
}

int run_os_hilbert(const std::string& file, bool as_json) {
  Matroid m = read_matroid_file(file);
  std::vector<long> dims = hilbert_series(m);
  emit(as_json, hilbert_to_string(dims) + "\n", json{{"dims", dims}, {"series", hilbert_to_string(dims)}});
  return 0;
}

int run_resonance(const std::string& file, const std::string& lambda_csv, int p, bool local,
                  const std::string& coloration_file, bool as_json) {
  Matroid m = read_matroid_file(file);
  if (local) {
    std::string text;
    json arr = json::array();
    for (const LocalComponent& c : local_components(m)) {
      text += "flat " + subset_to_string(c.flat) + " dim " + std::to_string(c.dimension) + "\n";
      arr.push_back(json{{"flat", elements_of(c.flat)}, {"dimension", c.dimension}});
    }
    emit(as_json, text, json{{"local_components", arr}});
    return 0;
  }
  if (!coloration_file.empty()) {
    std::ifstream in(coloration_file);
    if (!in) throw std::invalid_argument("cannot open " + coloration_file);
    json cj;
    in >> cj;
    Coloration pi = coloration_from_json(cj, m.n());
    CandidateSpaceReport report = coloration_candidate_space(m, pi);
    std::string text = "candidate space dimension " + std::to_string(report.dimension) + "\n";
    json samples = json::array();
    for (const auto& [lambda, member] : report.samples) {
      std::string lam;
      for (const Rat& v : lambda) lam += (lam.empty() ? "" : ",") + rat_to_string(v);
      text += "lambda " + lam + " in R1: " + (member ? "yes" : "no") + "\n";
      samples.push_back(json{{"lambda", lam}, {"member", member}});
    }
    text += report.all_members ? "all sampled vectors in R1\n" : "some sampled vector not in R1\n";
    emit(as_json, text,
         json{{"dimension", report.dimension}, {"samples", samples}, {"all_members", report.all_members}});
    return 0;
  }
  if (lambda_csv.empty()) throw CLI::ValidationError("resonance needs --lambda, --local or --coloration");
  LambdaVector lambda = parse_lambda(lambda_csv);
  ResonanceReport report = hp_dim(m, lambda, p);
  std::string text = "p=" + std::to_string(report.p) + " kernel=" + std::to_string(report.dim_kernel) +
                     " image=" + std::to_string(report.dim_image) + " H^p=" + std::to_string(report.dim_hp) +
                     " member=" + (report.member ? "yes" : "no") + "\n";
  emit(as_json, text,
       json{{"p", report.p},
            {"dim_kernel", report.dim_kernel},
            {"dim_image", report.dim_image},
            {"dim_hp", report.dim_hp},
            {"member", report.member}});
  return 0;
}

int run_color(const std::string& file, int enumerate_k, bool max_k, const std::string& check_file,
              bool as_json) {
  Matroid m = read_matroid_file(file);
  if (max_k) {
    int k = max_regular_k(m);
    emit(as_json, std::to_string(k) + "\n", json{{"max_regular_k", k}});
    return 0;
  }
  if (!check_file.empty()) {
    std::ifstream in(check_file);
    if (!in) throw std::invalid_argument("cannot open " + check_file);
    json cj;
    in >> cj;
    Coloration pi = coloration_from_json(cj, m.n());
    bool regular = is_regular(m, pi);
    emit(as_json, std::string(regular ? "REGULAR" : "NOT REGULAR") + "\n", json{{"regular", regular}});
    return 0;
  }
  if (enumerate_k < 2) throw CLI::ValidationError("color needs --enumerate K, --max-k or --check CFILE");
  std::vector<Coloration> found = search_regular(m, enumerate_k);
  std::string text;
  json arr = json::array();
  for (const Coloration& pi : found) {
    text += pi.to_string() + "\n";
    arr.push_back(coloration_to_json(pi));
  }
  emit(as_json, text, json{{"count", found.size()}, {"colorations", arr}});
  return 0;
}

int run_verify_counterexample(bool as_json) {
  Matroid m1 = generate("m1").matroid;
  Matroid m2 = generate("m2").matroid;
  BivariatePoly t1 = tutte(m1);
  BivariatePoly t2 = tutte(m2);
  Rat b1 = t1.eval(1, 1);
  Rat b2 = t2.eval(1, 1);
  bool tutte_differ = t1 != t2;
  bool hilbert_equal = hilbert_series(m1) == hilbert_series(m2);

  auto line_profile = [](const Matroid& m) {
    std::vector<std::pair<int, int>> profile;  // (size, dimension)
    for (const LocalComponent& c : local_components(m)) profile.emplace_back(set_size(c.flat), c.dimension);
    std::sort(profile.begin(), profile.end());
    return profile;
  };
  bool local_match = line_profile(m1) == line_profile(m2);

  bool counts_ok = b1 == 27 && b2 == 26 && m1.bases_count() == 27 && m2.bases_count() == 26;
  bool ok = counts_ok && tutte_differ && hilbert_equal && local_match;

  std::string text = "T_M1(1,1)=" + rat_to_string(b1) + "  T_M2(1,1)=" + rat_to_string(b2) +
                     (tutte_differ ? "  TUTTE DIFFER" : "  TUTTE EQUAL") +
                     (hilbert_equal ? "  HILBERT EQUAL" : "  HILBERT DIFFER") + "\n" +
                     (local_match ? "LOCAL MATCH" : "LOCAL MISMATCH") + "\n" + (ok ? "OK" : "FAIL") + "\n";
  emit(as_json, text,
       json{{"t_m1_11", rat_to_string(b1)},
            {"t_m2_11", rat_to_string(b2)},
            {"bases_m1", m1.bases_count()},
            {"bases_m2", m2.bases_count()},
            {"tutte_differ", tutte_differ},
            {"hilbert_equal", hilbert_equal},
            {"local_match", local_match},
            {"ok", ok}});
  if (!ok) throw VerifyFailure("counterexample checks failed");
  return 0;
}

int run_verify_free_ext(const std::string& file, bool as_json) {
  Matroid m = read_matroid_file(file);
  FreeExtReport report = verify_free_ext_ideal_eq(m);
  std::string text;
  json arr = json::array();
  for (const FreeExtDegree& d : report.degrees) {
    text += "degree " + std::to_string(d.degree) + ": lhs " + std::to_string(d.lhs_dim) + " rhs " +
            std::to_string(d.rhs_dim) + (d.equal ? " EQUAL" : " UNEQUAL") + "\n";
    arr.push_back(json{{"degree", d.degree}, {"lhs_dim", d.lhs_dim}, {"rhs_dim", d.rhs_dim}, {"equal", d.equal}});
  }
  text += report.ok ? "IDEAL EQUALITY HOLDS\n" : "IDEAL EQUALITY FAILS\n";
  emit(as_json, text, json{{"ok", report.ok}, {"degrees", arr}});
  if (!report.ok) throw VerifyFailure("free extension ideal equality failed");
  return 0;
}

int run_verify_sylvester(const std::string& family, bool as_json) {
  Generated gen = generate(family);
  const Matroid& m = gen.matroid;
  if (m.rank() != 3) throw std::invalid_argument("the sylvester suite applies to rank-3 matroids");
  int max_flat = 0;
  for (Subset f : m.flats_of_rank(2)) max_flat = std::max(max_flat, set_size(f));

  std::string text;
  json arr = json::array();
  bool ok = true;
  for (int k = 4; k <= std::min(m.n(), max_flat); ++k) {
    std::size_t count = search_regular(m, k).size();
    text += "k=" + std::to_string(k) + ": " + std::to_string(count) + " regular colorations\n";
    arr.push_back(json{{"k", k}, {"count", count}});
    ok = ok && count == 0;
  }
  text += ok ? "NO REGULAR COLORATION WITH >= 4 COLORS\n" : "REGULAR COLORATION WITH >= 4 COLORS EXISTS\n";
  emit(as_json, text, json{{"family", family}, {"ok", ok}, {"searched", arr}});
  if (!ok) throw VerifyFailure("sylvester suite failed for " + family);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Tutte / Orlik-Solomon / resonance toolkit for small matroids"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "mirror the report as JSON on stdout");

  std::string gen_family, gen_out, gen_matrix;
  CLI::App* gen = app.add_subcommand("gen", "generate a named matroid family");
  gen->add_option("--family", gen_family, "u:<r>,<n> | p5 | m1 | m2 | ngon:<k> | a112 | ag:<q>")->required();
  gen->add_option("-o,--output", gen_out, "output matroid JSON path");
  gen->add_option("--matrix", gen_matrix, "also write the exact realization matrix");

  std::string tutte_file;
  std::vector<std::string> tutte_eval;
  CLI::App* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial of a matroid file");
  tutte_cmd->add_option("file", tutte_file)->required();
  tutte_cmd->add_option("--eval", tutte_eval, "evaluate at x y")->expected(2);

  std::string charpoly_file;
  CLI::App* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial");
  charpoly_cmd->add_option("file", charpoly_file)->required();

  std::string hilbert_file;
  CLI::App* hilbert_cmd = app.add_subcommand("os-hilbert", "Hilbert series of the Orlik-Solomon algebra");
  hilbert_cmd->add_option("file", hilbert_file)->required();

  std::string res_file, res_lambda, res_coloration;
  int res_p = 1;
  bool res_local = false;
  CLI::App* res_cmd = app.add_subcommand("resonance", "resonance variety computations");
  res_cmd->add_option("file", res_file)->required();
  res_cmd->add_option("--lambda", res_lambda, "comma-separated rationals");
  res_cmd->add_option("--p", res_p, "cohomological degree (default 1)");
  res_cmd->add_flag("--local", res_local, "list local components");
  res_cmd->add_option("--coloration", res_coloration, "coloration JSON file for the candidate space");

  std::string color_file, color_check;
  int color_k = 0;
  bool color_max = false;
  CLI::App* color_cmd = app.add_subcommand("color", "regular colorations");
  color_cmd->add_option("file", color_file)->required();
  color_cmd->add_option("--enumerate", color_k, "list regular colorations with exactly K classes");
  color_cmd->add_flag("--max-k", color_max, "largest k >= 3 with a regular coloration");
  color_cmd->add_option("--check", color_check, "coloration JSON file to test");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verification pipelines");
  verify_cmd->require_subcommand(1);
  CLI::App* v_counter = verify_cmd->add_subcommand("counterexample", "the rank-4 pair M1/M2");
  std::string vfree_file;
  CLI::App* v_free = verify_cmd->add_subcommand("free-ext", "free extension ideal identity");
  v_free->add_option("file", vfree_file)->required();
  std::string vsyl_family;
  CLI::App* v_syl = verify_cmd->add_subcommand("sylvester", "no regular coloration with >= 4 colors");
  v_syl->add_option("--family", vsyl_family)->required();

  try {
    app.parse(argc, argv);
    if (*gen) return run_gen(gen_family, gen_out, gen_matrix, as_json);
    if (*tutte_cmd) return run_tutte(tutte_file, tutte_eval, as_json);
    if (*charpoly_cmd) return run_charpoly(charpoly_file, as_json);
    if (*hilbert_cmd) return run_os_hilbert(hilbert_file, as_json);
    if (*res_cmd) return run_resonance(res_file, res_lambda, res_p, res_local, res_coloration, as_json);
    if (*color_cmd) return run_color(color_file, color_k, color_max, color_check, as_json);
    if (*verify_cmd) {
      if (*v_counter) return run_verify_counterexample(as_json);
      if (*v_free) return run_verify_free_ext(vfree_file, as_json);
      if (*v_syl) return run_verify_sylvester(vsyl_family, as_json);
    }
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const VerifyFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
