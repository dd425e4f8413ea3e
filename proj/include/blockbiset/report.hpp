#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "charbiset.hpp"

/**
 * @file report.hpp
 * @brief Running the pipeline over (group, prime) jobs and serializing the
 * results as JSON ("blockbiset-report/1") and plain-text tables.
 *
 * Field elements are written as hex strings, two digits per polynomial
 * coefficient, constant term first. Orbit multiplicities are written as
 * [|Q|, class id, multiplicity] triples, zero entries omitted.
 */

namespace blockbiset {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "blockbiset-report/1";

/// Outcome of one (group, prime) job.
struct PrimeRun {
  int p = 0;
  bool ok = false;
  std::string error_kind;
  std::string error_message;
  TheoremReport report;  // valid only if ok

  bool passed() const { return ok && report.passed(); }
};

inline PrimeRun run_prime(const Group& G, int p)
{
  PrimeRun run;
  run.p = p;
  try {
    run.report = verify_theorem_main(G, p);
    run.ok = true;
  } catch (const Error& e) {
    run.error_kind = e.kind();
    run.error_message = e.what();
  } catch (const std::exception& e) {
    run.error_kind = "InternalError";
    run.error_message = e.what();
  }
  return run;
}

/// Runs every prime on a pool of `jobs` threads; results keep the order of
/// `primes`.
inline std::vector<PrimeRun> run_primes(const Group& G, const std::vector<int>& primes, int jobs)
{
  std::vector<PrimeRun> out(primes.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(primes.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < primes.size(); ++i)
      out[i] = run_prime(G, primes[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < primes.size(); i = next++)
        out[i] = run_prime(G, primes[i]);
    });
  for (auto& t : pool)
    t.join();
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline std::string field_element_hex(const GaloisField& F, FieldElement a)
{
  std::string s;
  char buf[3];
  for (int c : F.coefficients(a)) {
    std::snprintf(buf, sizeof buf, "%02x", c);
    s += buf;
  }
  return s;
}

inline Json multiplicities_json(const TwistedDiagonals& L, const Multiplicities& c)
{
  Json out = Json::array();
  for (int j = 0; j < L.class_count(); ++j)
    if (c[j] != 0)
      out.push_back(Json::array({L.at(j).Q().order(), j, c[j]}));
  return out;
}

inline Json verdict_json(const SemicharVerdict& v)
{
  return Json{{"bifree", v.bifree},
              {"symmetric", v.symmetric},
              {"f_generated", v.f_generated},
              {"f_invariant", v.f_invariant},
              {"index_prime_to_p", v.index_prime_to_p},
              {"semicharacteristic", v.semicharacteristic()},
              {"characteristic", v.characteristic},
              {"witnesses", v.witnesses}};
}

inline Json block_json(const std::string& group_name, const TheoremReport& r, const BlockReport& b)
{
  const GaloisField& F = *r.galois;
  const FusionSystem& fs = *r.fusion;
  Json idem = Json::array();
  for (auto c : b.idempotent.coeffs)
    idem.push_back(field_element_hex(F, c));
  Json omega = Json::array();
  for (const auto& [idx, coef] : b.omega_coefficients)
    omega.push_back(Json{{"subgroup", idx}, {"order", fs.subgroups()[idx].order()}, {"coefficient", coef}});
  const auto g = r.group.element(b.green_witness).images();
  return Json{
      {"group", group_name},
      {"prime", r.p},
      {"field", Json{{"p", r.field.p}, {"m", r.field.m}}},
      {"index", b.index},
      {"dimension", b.dimension},
      {"is_principal", b.is_principal},
      {"idempotent", idem},
      {"defect_group",
       Json{{"order", b.defect.order()},
            {"subgroup", b.defect.subgroup_index},
            {"f_class", fs.f_class_of(b.defect.subgroup_index)},
            {"elements", b.defect.group.elements()}}},
      {"multiplicities", multiplicities_json(*r.lattice, b.multiplicities)},
      {"marks",
       Json{{"twisted", b.marks.values},
            {"left_certificate", b.marks.left_certificate},
            {"right_certificate", b.marks.right_certificate}}},
      {"omega_coefficients", omega},
      {"verdict", verdict_json(b.verdict)},
      {"corollaries",
       Json{{"support_in_defect", b.corollary.support_in_defect},
            {"defect_coefficient_prime_to_p", b.corollary.defect_coefficient_prime},
            {"dimension_p_part", b.corollary.dimension_p_part},
            {"characteristic_iff_maximal_defect", b.characteristic_iff_maximal_defect},
            {"subbiset_of_double_cosets", b.subbiset_of_double_cosets}}},
      {"green_witness", Json{{"element", b.green_witness}, {"images", std::vector<int>(g.begin(), g.end())}}},
      {"passed", b.passed()}};
}

inline Json prime_run_json(const std::string& group_name, const PrimeRun& run)
{
  Json j{{"prime", run.p}};
  if (!run.ok) {
    j["status"] = "error";
    j["error"] = Json{{"kind", run.error_kind}, {"message", run.error_message}};
    j["passed"] = false;
    return j;
  }
  const TheoremReport& r = run.report;
  const FusionSystem& fs = *r.fusion;
  const TwistedDiagonals& L = *r.lattice;
  j["status"] = "ok";
  j["field"] = Json{{"p", r.field.p}, {"m", r.field.m}, {"modulus", r.galois->modulus()}};
  j["sylow_order"] = r.sylow.order();

  Json classes = Json::array();
  for (const auto& c : L.classes())
    classes.push_back(Json{{"id", c.class_id}, {"order", c.Q().order()},
                           {"domain", c.Q().elements()}, {"images", c.phi.images}});
  j["twisted_classes"] = classes;

  Json reps = Json::array();
  for (int idx : fs.fully_normalized_reps())
    reps.push_back(Json{{"subgroup", idx}, {"order", fs.subgroups()[idx].order()},
                        {"elements", fs.subgroups()[idx].elements()}});
  j["fusion"] = Json{{"subgroup_count", fs.subgroups().size()},
                     {"f_class_count", fs.f_classes().size()},
                     {"fully_normalized", reps}};

  Json omega = Json::array();
  for (const auto& e : r.omega)
    omega.push_back(Json{{"subgroup", e.subgroup_index}, {"order", e.P.order()},
                         {"multiplicities", multiplicities_json(L, e.multiplicities)}});
  j["omega_basis"] = omega;

  j["double_cosets"] = Json{{"multiplicities", multiplicities_json(L, r.double_coset_multiplicities)},
                            {"verdict", verdict_json(r.double_coset_verdict)}};
  j["partition_holds"] = r.partition_holds;
  j["characteristic_p"] =
      Json{{"characteristic_p", r.characteristic_p.characteristic_p},
           {"local_characteristic_p", r.characteristic_p.local_characteristic_p},
           {"unique_block", r.characteristic_p.characteristic_p ? Json(r.characteristic_p.unique_block)
                                                               : Json("not applicable")},
           {"nonprincipal_defect_zero", r.characteristic_p.local_characteristic_p
                                            ? Json(r.characteristic_p.nonprincipal_defect_zero)
                                            : Json("not applicable")}};
  Json blocks = Json::array();
  for (const auto& b : r.blocks)
    blocks.push_back(block_json(group_name, r, b));
  j["blocks"] = blocks;
  j["passed"] = run.passed();
  return j;
}

inline Json group_json(const GroupSpec& spec, const Group& G)
{
  Json gens = Json::array();
  for (const auto& g : spec.generators) {
    auto im = g.images();
    gens.push_back(std::vector<int>(im.begin(), im.end()));
  }
  return Json{{"name", spec.name}, {"degree", spec.degree}, {"order", G.order()}, {"generators", gens}};
}

inline Json report_json(const GroupSpec& spec, const Group& G, const std::vector<PrimeRun>& runs)
{
  Json j{{"group", group_json(spec, G)}};
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : runs) {
    arr.push_back(prime_run_json(spec.name, r));
    all = all && r.passed();
  }
  j["runs"] = arr;
  j["passed"] = all;
  return j;
}

/// Entry for input that never reached the pipeline (bad spec, group too big).
inline Json error_report_json(const std::string& source, const Error& e)
{
  return Json{{"source", source},
              {"error", Json{{"kind", e.kind()}, {"message", e.what()}}},
              {"passed", false}};
}

/// The top-level document: one entry per input group.
inline Json document_json(const std::vector<Json>& reports)
{
  bool all = true;
  for (const auto& r : reports)
    all = all && r.at("passed").get<bool>();
  return Json{{"schema", kReportSchema}, {"reports", reports}, {"passed", all}};
}

// ---------------------------------------------------------------------------
// text

namespace detail {

inline std::string table(const std::vector<std::vector<std::string>>& rows)
{
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c)
        width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size())
        line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

inline const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline std::string prime_run_text(const std::string& group_name, const Group& G, const PrimeRun& run)
{
  std::ostringstream out;
  out << group_name << "  |G| = " << G.order() << "  p = " << run.p;
  if (!run.ok) {
    out << "\n  error: " << run.error_message << "\n";
    return out.str();
  }
  const TheoremReport& r = run.report;
  out << "  k = GF(" << r.field.p << "^" << r.field.m << ")  |S| = " << r.sylow.order()
      << "  twisted classes = " << r.lattice->class_count() << "\n";

  std::vector<std::vector<std::string>> rows{{"block", "dim", "principal", "|D|", "orbits", "Omega",
                                              "semichar", "char", "corollaries", "green g", "pass"}};
  for (const auto& b : r.blocks) {
    std::int64_t orbits = 0;
    for (auto c : b.multiplicities)
      orbits += c;
    std::string omega;
    for (const auto& [idx, coef] : b.omega_coefficients)
      if (coef != 0) {
        if (!omega.empty())
          omega += " + ";
        omega += std::to_string(coef) + "*O" + std::to_string(r.fusion->subgroups()[idx].order());
      }
    rows.push_back({std::to_string(b.index), std::to_string(b.dimension), detail::yn(b.is_principal),
                    std::to_string(b.defect.order()), std::to_string(orbits), omega,
                    detail::yn(b.verdict.semicharacteristic()), detail::yn(b.verdict.characteristic),
                    detail::yn(b.corollary.all() && b.characteristic_iff_maximal_defect),
                    std::to_string(b.green_witness), b.passed() ? "PASS" : "FAIL"});
  }
  std::istringstream tbl(detail::table(rows));
  for (std::string line; std::getline(tbl, line);)
    out << "  " << line << "\n";
  out << "  _S G_S characteristic: " << detail::yn(r.double_coset_verdict.characteristic)
      << "  partition: " << detail::yn(r.partition_holds)
      << "  char p: " << (r.characteristic_p.characteristic_p ? "yes" : "n/a")
      << "  local char p: " << (r.characteristic_p.local_characteristic_p ? "yes" : "n/a")
      << "  result: " << (run.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

inline std::string report_text(const GroupSpec& spec, const Group& G, const std::vector<PrimeRun>& runs)
{
  std::string out;
  for (const auto& r : runs)
    out += prime_run_text(spec.name, G, r);
  return out;
}

}  // namespace blockbiset
