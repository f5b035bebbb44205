#ifndef ORBITCERT_PROBLEM_HPP
#define ORBITCERT_PROBLEM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbitcert/criteria.hpp"
#include "orbitcert/transcript.hpp"

namespace orbitcert {

struct AlgebraSpec {
  std::optional<ClassicalId> classical;
  std::optional<std::size_t> custom_dim;
  std::vector<StructureEntry> structure_constants;
  std::vector<std::string> labels;
};

/// A parsed problem document: the algebra, the subalgebra with its optional
/// declared split, and the run options.
struct ProblemSpec {
  AlgebraSpec algebra;
  std::vector<QVec> basis;
  std::optional<std::vector<QVec>> levi_basis;
  std::optional<std::vector<QVec>> unipotent_radical_basis;
  CheckOptions options;
};

namespace detail {

inline Rat rational_at(const Json& v, const std::string& path) {
  if (v.is_number_integer())
    return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const RationalParseError& e) {
      throw SchemaError(path, e.what());
    }
  }
  if (v.is_number_float())
    throw SchemaError(path,
                      "floating point is not accepted; use \"p/q\" strings");
  throw SchemaError(path, "expected an integer or a rational string");
}

inline std::vector<QVec> vector_list_at(const Json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of vectors");
  std::vector<QVec> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& row = v[i];
    std::string rpath = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw SchemaError(rpath, "expected a vector");
    QVec vec;
    for (std::size_t j = 0; j < row.size(); ++j)
      vec.push_back(rational_at(row[j], rpath + "[" + std::to_string(j) + "]"));
    out.push_back(std::move(vec));
  }
  return out;
}

inline ClassicalFamily family_from(const std::string& name,
                                   const std::string& path) {
  if (name == "sl") return ClassicalFamily::sl;
  if (name == "so") return ClassicalFamily::so;
  if (name == "sp") return ClassicalFamily::sp;
  throw SchemaError(path, "unknown family '" + name + "' (sl, so, sp)");
}

inline std::string family_name(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::sl: return "sl";
    case ClassicalFamily::so: return "so";
    default: return "sp";
  }
}

}  // namespace detail

/// Parses a problem document. Rationals come as integers or "p/q" strings;
/// anything else is rejected with a path-addressed SchemaError.
inline ProblemSpec parse_problem(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  ProblemSpec spec;

  if (!doc.contains("algebra"))
    throw SchemaError("$.algebra", "missing required field");
  const Json& alg = doc["algebra"];
  if (!alg.is_object()) throw SchemaError("$.algebra", "expected an object");
  if (alg.contains("family")) {
    if (!alg["family"].is_string())
      throw SchemaError("$.algebra.family", "expected a string");
    if (!alg.contains("n") || !alg["n"].is_number_integer())
      throw SchemaError("$.algebra.n", "expected an integer");
    spec.algebra.classical =
        ClassicalId{detail::family_from(alg["family"].get<std::string>(),
                                        "$.algebra.family"),
                    alg["n"].get<int>()};
  } else if (alg.contains("dim")) {
    if (!alg["dim"].is_number_integer() || alg["dim"].get<long long>() <= 0)
      throw SchemaError("$.algebra.dim", "expected a positive integer");
    spec.algebra.custom_dim = alg["dim"].get<std::size_t>();
    if (alg.contains("labels")) {
      if (!alg["labels"].is_array())
        throw SchemaError("$.algebra.labels", "expected an array of strings");
      for (const auto& l : alg["labels"]) {
        if (!l.is_string())
          throw SchemaError("$.algebra.labels", "expected an array of strings");
        spec.algebra.labels.push_back(l.get<std::string>());
      }
      if (spec.algebra.labels.size() != *spec.algebra.custom_dim)
        throw SchemaError("$.algebra.labels", "length must equal dim");
    } else {
      for (std::size_t i = 0; i < *spec.algebra.custom_dim; ++i)
        spec.algebra.labels.push_back("b" + std::to_string(i + 1));
    }
    if (!alg.contains("structure_constants") ||
        !alg["structure_constants"].is_array())
      throw SchemaError("$.algebra.structure_constants",
                        "expected an array of [k, i, j, c] quadruples");
    const Json& sc = alg["structure_constants"];
    for (std::size_t t = 0; t < sc.size(); ++t) {
      std::string p = "$.algebra.structure_constants[" + std::to_string(t) + "]";
      const Json& quad = sc[t];
      if (!quad.is_array() || quad.size() != 4)
        throw SchemaError(p, "expected [k, i, j, c]");
      for (int u = 0; u < 3; ++u)
        if (!quad[u].is_number_integer())
          throw SchemaError(p + "[" + std::to_string(u) + "]",
                            "expected an integer index");
      StructureEntry e;
      e.k = quad[0].get<int>();
      e.i = quad[1].get<int>();
      e.j = quad[2].get<int>();
      e.c = detail::rational_at(quad[3], p + "[3]");
      spec.algebra.structure_constants.push_back(std::move(e));
    }
  } else {
    throw SchemaError("$.algebra", "need either {family, n} or {dim, ...}");
  }

  if (doc.contains("subalgebra")) {
    const Json& sub = doc["subalgebra"];
    if (!sub.is_object())
      throw SchemaError("$.subalgebra", "expected an object");
    if (!sub.contains("basis"))
      throw SchemaError("$.subalgebra.basis", "missing required field");
    spec.basis = detail::vector_list_at(sub["basis"], "$.subalgebra.basis");
    if (sub.contains("levi_basis"))
      spec.levi_basis =
          detail::vector_list_at(sub["levi_basis"], "$.subalgebra.levi_basis");
    if (sub.contains("unipotent_radical_basis"))
      spec.unipotent_radical_basis = detail::vector_list_at(
          sub["unipotent_radical_basis"], "$.subalgebra.unipotent_radical_basis");
    if (spec.levi_basis.has_value() != spec.unipotent_radical_basis.has_value())
      throw SchemaError("$.subalgebra",
                        "levi_basis and unipotent_radical_basis must be "
                        "declared together");
  }

  if (doc.contains("options")) {
    const Json& opt = doc["options"];
    if (!opt.is_object()) throw SchemaError("$.options", "expected an object");
    if (opt.contains("seed")) {
      if (!opt["seed"].is_number_integer())
        throw SchemaError("$.options.seed", "expected an integer");
      spec.options.seed = opt["seed"].get<std::uint64_t>();
    }
    if (opt.contains("kn_tol")) {
      if (!opt["kn_tol"].is_number())
        throw SchemaError("$.options.kn_tol", "expected a number");
      spec.options.kn_tol = opt["kn_tol"].get<double>();
      if (spec.options.kn_tol <= 0)
        throw SchemaError("$.options.kn_tol", "must be positive");
    }
    if (opt.contains("kn_max_iter")) {
      if (!opt["kn_max_iter"].is_number_integer())
        throw SchemaError("$.options.kn_max_iter", "expected an integer");
      spec.options.kn_max_iter = opt["kn_max_iter"].get<int>();
    }
    if (opt.contains("assert_no_reductive_overgroup")) {
      if (!opt["assert_no_reductive_overgroup"].is_boolean())
        throw SchemaError("$.options.assert_no_reductive_overgroup",
                          "expected a boolean");
      spec.options.assert_no_reductive_overgroup =
          opt["assert_no_reductive_overgroup"].get<bool>();
    }
  }
  return spec;
}

/// Canonical serialization; parse_problem(serialize(s)) reproduces s exactly.
inline Json serialize(const ProblemSpec& spec) {
  Json doc;
  Json alg;
  if (spec.algebra.classical) {
    alg["family"] = detail::family_name(spec.algebra.classical->family);
    alg["n"] = spec.algebra.classical->n;
  } else {
    alg["dim"] = *spec.algebra.custom_dim;
    Json labels = Json::array();
    for (const auto& l : spec.algebra.labels) labels.push_back(l);
    alg["labels"] = labels;
    Json sc = Json::array();
    for (const auto& e : spec.algebra.structure_constants)
      sc.push_back(Json::array({e.k, e.i, e.j, to_string(e.c)}));
    alg["structure_constants"] = sc;
  }
  doc["algebra"] = alg;
  Json sub;
  sub["basis"] = json_of(spec.basis);
  if (spec.levi_basis) sub["levi_basis"] = json_of(*spec.levi_basis);
  if (spec.unipotent_radical_basis)
    sub["unipotent_radical_basis"] = json_of(*spec.unipotent_radical_basis);
  doc["subalgebra"] = sub;
  Json opt;
  opt["seed"] = spec.options.seed;
  opt["kn_tol"] = spec.options.kn_tol;
  opt["kn_max_iter"] = spec.options.kn_max_iter;
  opt["assert_no_reductive_overgroup"] =
      spec.options.assert_no_reductive_overgroup;
  doc["options"] = opt;
  return doc;
}

/// A live problem: the algebra is heap-allocated so the subalgebra's back
/// reference stays valid when the instance moves.
struct ProblemInstance {
  std::unique_ptr<LieAlgebra> algebra;
  Subalgebra subalgebra;
};

inline ProblemInstance instantiate(const ProblemSpec& spec) {
  ProblemInstance inst;
  if (spec.algebra.classical) {
    inst.algebra = std::make_unique<LieAlgebra>(make_classical(
        spec.algebra.classical->family, spec.algebra.classical->n));
  } else {
    inst.algebra = std::make_unique<LieAlgebra>(make_lie_algebra(
        spec.algebra.structure_constants, spec.algebra.labels));
  }
  const LieAlgebra& g = *inst.algebra;
  auto to_elements = [&](const std::vector<QVec>& vs) {
    std::vector<Element> out;
    for (const auto& v : vs) out.push_back(g.element(v));
    return out;
  };
  std::optional<std::vector<Element>> levi, unip;
  if (spec.levi_basis) {
    levi = to_elements(*spec.levi_basis);
    unip = to_elements(*spec.unipotent_radical_basis);
  }
  inst.subalgebra =
      make_subalgebra(g, to_elements(spec.basis), std::move(levi),
                      std::move(unip));
  return inst;
}

}  // namespace orbitcert

#endif
