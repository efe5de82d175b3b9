#include "milnor/analysis.hpp"

#include <chrono>
#include <iomanip>
#include <numeric>
#include <nlohmann/json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "milnor/errors.hpp"
#include "milnor/monodromy.hpp"
#include "milnor/newton.hpp"
#include "milnor/support.hpp"

namespace milnor {
namespace {

using Json = nlohmann::ordered_json;

struct Analysis {
  SupportSet support;
  NewtonPolyhedron np;
  std::optional<MotivicTable> motive;
  std::optional<JordanSpectrum> spectrum;
  Int mu = 0;
  std::map<RootOfUnity, std::pair<Int, Int>> top;
  std::pair<Int, Int> unipotent;
  std::optional<ValidationReport> report;
};

bool wanted(const AnalyzeOptions& o, const RootOfUnity& a) { return !o.eigenvalue || *o.eigenvalue == a; }

Json table_json(const HodgeTable& t) {
  Json arr = Json::array();
  for (const auto& [idx, v] : t.entries())
    arr.push_back({{"p", idx.p}, {"q", idx.q}, {"alpha", idx.alpha.str()}, {"value", v}});
  return arr;
}

Json document_json(const AnalyzeOptions& o, const Analysis& a) {
  Json doc;
  doc["input"] = o.polynomial ? Json{{"polynomial", *o.polynomial}} : Json{{"support_file", o.support_path->string()}};
  doc["variables"] = a.support.variables;
  doc["support"] = a.support.points;
  doc["n"] = a.support.n();
  doc["convenient"] = a.np.convenient;
  Json faces = Json::array();
  for (const auto& f : a.np.faces)
    faces.push_back({{"id", f.id},
                     {"dim", f.dim},
                     {"vertices", f.vertices},
                     {"d", f.d},
                     {"m", f.m},
                     {"interior_touching", f.interior_touching}});
  doc["faces"] = faces;
  doc["mu"] = a.mu;
  if (a.spectrum) {
    Json mult = Json::object(), blocks = Json::object();
    for (const auto& [lambda, c] : a.spectrum->multiplicities) {
      if (!wanted(o, lambda)) continue;
      mult[lambda.str()] = c;
      Json sizes = Json::object();
      for (const auto& [key, count] : a.spectrum->blocks)
        if (key.first == lambda) sizes[std::to_string(key.second)] = count;
      blocks[lambda.str()] = sizes;
    }
    doc["multiplicities"] = mult;
    doc["blocks"] = blocks;
  }
  Json top = Json::object();
  for (const auto& [lambda, c] : a.top)
    top[lambda.str()] = {{"size_n", c.first}, {"size_n_minus_1", c.second}};
  doc["fastpaths"] = {{"top", top},
                      {"unipotent", {{"size_n_minus_1", a.unipotent.first}, {"size_n_minus_2", a.unipotent.second}}}};
  if (o.emit_hodge_tables && a.motive) {
    Json per_face = Json::array();
    for (const auto& ft : a.motive->faces)
      per_face.push_back({{"id", ft.face_id}, {"pyramid", table_json(ft.delta)}, {"face", table_json(ft.gamma)}});
    doc["hodge_tables"] = {{"faces", per_face},
                           {"first_sum", table_json(a.motive->first_sum)},
                           {"second_sum", table_json(a.motive->second_sum)},
                           {"total", table_json(a.motive->total)}};
  }
  if (a.report) {
    Json checks = Json::array();
    for (const auto& c : a.report->checks) {
      Json entry{{"name", c.name}, {"pass", c.pass}};
      if (!c.pass) entry["detail"] = c.detail;
      checks.push_back(entry);
    }
    doc["validation"] = {{"passed", a.report->ok()}, {"checks", checks}};
  }
  return doc;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

void print_table_hodge(std::ostream& out, const std::string& title, const HodgeTable& t) {
  out << "  " << title << ":";
  if (t.empty()) out << " (zero)";
  out << '\n';
  for (const auto& [idx, v] : t.entries())
    out << "    e^{" << idx.p << "," << idx.q << "}_" << idx.alpha.str() << " = " << v << '\n';
}

void write_table(std::ostream& out, const AnalyzeOptions& o, const Analysis& a) {
  out << "input: " << (o.polynomial ? *o.polynomial : o.support_path->string()) << '\n';
  out << "variables: ";
  for (std::size_t i = 0; i < a.support.variables.size(); ++i) out << (i ? ", " : "") << a.support.variables[i];
  out << "  (n = " << a.support.n() << ", " << a.support.points.size() << " support points, convenient)\n\n";

  out << "compact faces: " << a.np.faces.size() << '\n';
  out << "  " << pad("id", 4) << pad("dim", 4) << pad("d", 6) << pad("m", 3) << pad("interior", 9) << "vertices\n";
  for (const auto& f : a.np.faces) {
    std::string vs;
    for (std::size_t i = 0; i < f.vertices.size(); ++i) vs += (i ? " " : "") + to_string(f.vertices[i]);
    out << "  " << pad(std::to_string(f.id), 4) << pad(std::to_string(f.dim), 4) << pad(std::to_string(f.d), 6)
        << pad(std::to_string(f.m), 3) << pad(f.interior_touching ? "yes" : "no", 9) << vs << '\n';
  }
  out << "\nmu = " << a.mu << '\n';

  if (a.spectrum) {
    out << "\n  " << pad("eigenvalue", 12) << pad("mult", 6) << "blocks (size:count)\n";
    for (const auto& [lambda, c] : a.spectrum->multiplicities) {
      if (!wanted(o, lambda)) continue;
      std::string bl;
      for (const auto& [key, count] : a.spectrum->blocks)
        if (key.first == lambda) bl += (bl.empty() ? "" : " ") + std::to_string(key.second) + ":" + std::to_string(count);
      out << "  " << pad(lambda.str(), 12) << pad(std::to_string(c), 6) << bl << '\n';
    }
  }

  out << "\nclosed formulas:\n";
  for (const auto& [lambda, c] : a.top)
    out << "  eigenvalue " << lambda.str() << ": " << c.first << " block(s) of size n, " << c.second
        << " of size n-1\n";
  out << "  eigenvalue 1: " << a.unipotent.first << " block(s) of size n-1, " << a.unipotent.second
      << " of size n-2\n";

  if (o.emit_hodge_tables && a.motive) {
    out << "\nHodge tables:\n";
    for (const auto& ft : a.motive->faces) {
      print_table_hodge(out, "face " + std::to_string(ft.face_id) + " pyramid", ft.delta);
      if (a.np.faces[ft.face_id].dim >= 1) print_table_hodge(out, "face " + std::to_string(ft.face_id), ft.gamma);
    }
    print_table_hodge(out, "first sum", a.motive->first_sum);
    print_table_hodge(out, "second sum", a.motive->second_sum);
    print_table_hodge(out, "total", a.motive->total);
  }

  if (a.report) {
    out << "\nvalidation: " << (a.report->ok() ? "passed" : "FAILED") << '\n';
    for (const auto& c : a.report->checks) {
      out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
      if (!c.pass) out << ": " << c.detail;
      out << '\n';
    }
  }
}

std::vector<RootOfUnity> candidate_eigenvalues(const NewtonPolyhedron& np) {
  std::set<RootOfUnity> out;
  for (const auto& f : np.faces)
    for (Int den = 2; den <= f.d; ++den)
      if (f.d % den == 0)
        for (Int num = 1; num < den; ++num)
          if (std::gcd(num, den) == 1) out.insert(RootOfUnity(num, den));
  return {out.begin(), out.end()};
}

}  // namespace

int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err,
                const ValidationOptions& validation) {
  const auto start = std::chrono::steady_clock::now();
  try {
    if (options.polynomial.has_value() == options.support_path.has_value())
      throw InputError("give exactly one of a polynomial or --support PATH");

    Analysis a;
    a.support = options.polynomial ? parse_polynomial(*options.polynomial) : load_support(*options.support_path);
    if (!options.unsafe_large) {
      if (a.support.n() > kMaxVariables)
        throw InputError(std::to_string(a.support.n()) + " variables exceed the limit of " +
                         std::to_string(kMaxVariables) + " (use --unsafe-large)");
      if (static_cast<int>(a.support.points.size()) > kMaxSupportPoints)
        throw InputError(std::to_string(a.support.points.size()) + " support points exceed the limit of " +
                         std::to_string(kMaxSupportPoints) + " (use --unsafe-large)");
    }
    a.np = newton_polyhedron(a.support);

    for (const auto& lambda : candidate_eigenvalues(a.np)) {
      if (!wanted(options, lambda)) continue;
      const auto c = fastpath_top(a.np, lambda);
      if (c.first != 0 || c.second != 0 || options.eigenvalue) a.top[lambda] = c;
    }
    a.unipotent = fastpath_unipotent(a.np);

    if (options.fast_only) {
      a.mu = newton_number(a.np);
    } else {
      a.motive = motivic_milnor_table(a.np);
      a.spectrum = jordan_blocks(*a.motive);
      a.mu = a.spectrum->mu;
    }
    if (options.validate) a.report = validate(a.np, validation);

    if (options.format == OutputFormat::Json) out << std::setw(2) << document_json(options, a) << '\n';
    else write_table(out, options, a);

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    err << "elapsed: " << ms.count() << " ms\n";
    if (a.report && !a.report->ok()) {
      for (const auto& c : a.report->checks)
        if (!c.pass) err << "validation failed: " << c.name << ": " << c.detail << '\n';
      return kExitInternal;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace milnor
