// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mcone/cone.h"
#include "mcone/errors.h"
#include "mcone/invariants.h"
#include "mcone/transfer.h"
#include "mcone/zlattice.h"
#include "serialization.h"

namespace mcone::cli {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  Limits limits;
};

std::string ReadText(Context& ctx, const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << ctx.in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

Json ReadJson(Context& ctx, const std::string& path) {
  return ParseJson(ReadText(ctx, path));
}

ConeVariant VariantOrThrow(const std::string& name) {
  const auto kind = ParseVariant(name);
  if (!kind) throw ValidationError("unknown variant \"" + name + "\"");
  return *kind;
}

Json InvariantOf(const Matroid& m, const std::string& kind, const Limits& limits) {
  if (kind == "g") return GInvariantToJson(ComputeGInvariant(m, limits));
  if (kind == "catenary") return CatenaryToJson(ComputeCatenaryData(m));
  if (kind == "tutte") return TutteToJson(ComputeTutte(m, limits));
  if (kind == "characteristic") {
    return CharacteristicToJson(ComputeCharacteristic(m, limits));
  }
  if (kind == "src") return SrcToJson(ComputeSrcData(m, limits));
  if (kind == "config") return ConfigurationToJson(ComputeConfiguration(m));
  throw ValidationError("unknown invariant kind \"" + kind + "\"");
}

// Canonical (key, value) entries of an invariant document; the key order
// matches the serialized order.
std::vector<std::pair<std::string, std::string>> Entries(const Json& doc,
                                                         const std::string& kind) {
  std::vector<std::pair<std::string, std::string>> out;
  if (kind == "g") {
    const GInvariant g = GInvariantFromJson(doc);
    out.push_back({"(n,k)", std::to_string(g.n) + "," + std::to_string(g.k)});
    for (const auto& [seq, count] : g.counts) out.push_back({"[" + seq + "]", count.str()});
  } else if (kind == "catenary") {
    const CatenaryData cat = CatenaryFromJson(doc);
    out.push_back({"(n,k)", std::to_string(cat.n) + "," + std::to_string(cat.k)});
    for (const auto& [a, count] : cat.counts) {
      std::string key = "nu(";
      for (size_t i = 0; i < a.size(); ++i) key += (i ? "," : "") + std::to_string(a[i]);
      out.push_back({key + ")", count.str()});
    }
  } else if (kind == "tutte") {
    for (const auto& [e, c] : TutteFromJson(doc).coefficients) {
      out.push_back({"x^" + std::to_string(e.first) + " y^" + std::to_string(e.second),
                     c.str()});
    }
  } else if (kind == "characteristic") {
    const Polynomial p = CharacteristicFromJson(doc);
    for (size_t i = 0; i < p.coefficients.size(); ++i) {
      if (p.coefficients[i] != 0) {
        out.push_back({"x^" + std::to_string(i), p.coefficients[i].str()});
      }
    }
  } else if (kind == "src") {
    for (const auto& [key, count] : SrcFromJson(doc).counts) {
      out.push_back({"(" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                         std::to_string(key[2]) + ")",
                     count.str()});
    }
  }
  return out;
}

// The first entry where the documents differ, or "" if none.
std::string FirstDifference(const Json& a, const Json& b, const std::string& kind) {
  if (kind == "config") {
    const Configuration ca = ConfigurationFromJson(a);
    const Configuration cb = ConfigurationFromJson(b);
    if (ConfigurationsEqual(ca, cb)) return "";
    if (ca.num_nodes() != cb.num_nodes()) {
      return "cyclic flats: " + std::to_string(ca.num_nodes()) + " vs " +
             std::to_string(cb.num_nodes());
    }
    return "labeled lattices are not isomorphic";
  }
  auto ea = Entries(a, kind);
  auto eb = Entries(b, kind);
  // Keys keep the serialized order, which is not string order.
  std::map<std::string, std::pair<std::string, std::string>> merged;
  std::vector<std::string> order;
  for (const auto& [key, v] : ea) {
    merged[key].first = v;
    order.push_back(key);
  }
  for (const auto& [key, v] : eb) {
    if (!merged.contains(key)) order.push_back(key);
    merged[key].second = v;
  }
  for (const std::string& key : order) {
    auto [va, vb] = merged[key];
    if (va != vb) {
      return key + ": " + (va.empty() ? "0" : va) + " vs " + (vb.empty() ? "0" : vb);
    }
  }
  return "";
}

Json InvariantDocument(Context& ctx, const std::string& path, const std::string& kind) {
  const Json doc = ReadJson(ctx, path);
  if (doc.is_object() && doc.contains("ground_set")) {
    return InvariantOf(MatroidFromJson(doc), kind, ctx.limits);
  }
  return doc;
}

int Validate(Context& ctx, const std::string& path) {
  const MatroidDocument doc = ParseMatroidDocument(ReadJson(ctx, path));
  const int n = static_cast<int>(doc.ground_set.size());
  Json report;
  if (doc.cyclic_flats) {
    const AxiomReport axioms = ValidateAxioms(n, *doc.cyclic_flats);
    if (!axioms.ok) {
      report = {{"valid", false},
                {"axiom", AxiomName(axioms.axiom)},
                {"first", SubsetToJson(axioms.first, doc.ground_set)},
                {"second", SubsetToJson(axioms.second, doc.ground_set)},
                {"detail", axioms.detail}};
      ctx.out << Dump(report);
      return kExitInvalid;
    }
  }
  Matroid m = Matroid::Uniform(0, 0);
  try {
    m = BuildMatroid(doc);
  } catch (const NotABasisSystem& e) {
    report = {{"valid", false},
              {"error", "not a basis system"},
              {"first", SubsetToJson(e.first(), doc.ground_set)},
              {"second", SubsetToJson(e.second(), doc.ground_set)},
              {"detail", e.what()}};
    ctx.out << Dump(report);
    return kExitInvalid;
  }
  report = {{"valid", true},
            {"n", m.size()},
            {"rank", m.rank()},
            {"cyclic_flats", m.cyclic_flats().size()},
            {"loopless", m.IsLoopless()},
            {"coloops", m.Coloops().Size()}};
  ctx.out << Dump(report);
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Free m-cones of matroids: construction, invariants, transfer"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{in, out, {}};
  app.add_option("--threads", ctx.limits.threads, "Workers for subset scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-subsets", ctx.limits.max_subsets,
                 "Largest subset enumeration allowed (default 2^25)");
  app.add_option("--max-perms", ctx.limits.max_perms,
                 "Largest permutation count allowed (default 10!)");

  std::function<int()> action;
  std::string file;
  std::string file_b;
  int m = 1;
  std::string variant = "full";
  std::string kind;

  auto* validate = app.add_subcommand("validate", "Check a matroid document");
  validate->add_option("file", file, "Matroid document or -")->required();
  validate->callback([&] { action = [&] { return Validate(ctx, file); }; });

  auto* cone = app.add_subcommand("cone", "Free m-cone or one of its variants");
  cone->add_option("--m", m, "Fiber size")->required()->check(CLI::PositiveNumber);
  cone->add_option("--variant", variant, "full|tipless|baseless|tipless-baseless");
  cone->add_option("file", file, "Matroid document or -")->required();
  cone->callback([&] {
    action = [&] {
      const MatroidDocument doc = ParseMatroidDocument(ReadJson(ctx, file));
      const Matroid source = BuildMatroid(doc);
      const ConeVariant v = VariantOrThrow(variant);
      const Matroid result = FreeMCone(source, m).Variant(v);
      std::optional<std::string> name;
      if (doc.name) {
        name = std::string(VariantName(v)) + " " + std::to_string(m) + "-cone of " + *doc.name;
      }
      ctx.out << Dump(MatroidToJson(result, name));
      return static_cast<int>(kExitOk);
    };
  });

  auto* invariant = app.add_subcommand("invariant", "Compute an invariant");
  invariant->add_option("--kind", kind, "g|catenary|tutte|characteristic|src|config")
      ->required();
  invariant->add_option("file", file, "Matroid document or -")->required();
  invariant->callback([&] {
    action = [&] {
      ctx.out << Dump(InvariantOf(MatroidFromJson(ReadJson(ctx, file)), kind, ctx.limits));
      return static_cast<int>(kExitOk);
    };
  });

  auto* transfer = app.add_subcommand(
      "transfer", "Invariant of a cone computed from data of the source only");
  transfer->add_option("--what", kind, "catenary|tutte")->required();
  transfer->add_option("--m", m, "Fiber size")->required()->check(CLI::PositiveNumber);
  transfer->add_option("--variant", variant, "full|tipless|baseless|tipless-baseless");
  transfer->add_option("file", file, "Matroid document or -")->required();
  transfer->callback([&] {
    action = [&] {
      const Matroid source = MatroidFromJson(ReadJson(ctx, file));
      if (!source.IsLoopless()) throw SourceHasLoops();
      const ConeVariant v = VariantOrThrow(variant);
      if (kind == "catenary") {
        ctx.out << Dump(CatenaryToJson(CatenaryOfCone(ComputeCatenaryData(source), m, v)));
      } else if (kind == "tutte") {
        ctx.out << Dump(
            TutteToJson(TutteOfConeFromSrc(ComputeSrcData(source, ctx.limits), m, v)));
      } else {
        throw ValidationError("transfer supports catenary and tutte");
      }
      return static_cast<int>(kExitOk);
    };
  });

  auto* reconstruct =
      app.add_subcommand("reconstruct", "Recover a matroid from a cone configuration");
  reconstruct->add_option("--m", m, "Fiber size")->required()->check(CLI::PositiveNumber);
  reconstruct->add_option("--variant", variant, "full|tipless|baseless|tipless-baseless");
  reconstruct->add_option("file", file, "Configuration document or -")->required();
  reconstruct->callback([&] {
    action = [&] {
      const Configuration config = ConfigurationFromJson(ReadJson(ctx, file));
      ctx.out << Dump(MatroidToJson(
          ReconstructFromConeConfig(config, VariantOrThrow(variant), m)));
      return static_cast<int>(kExitOk);
    };
  });

  auto* compare = app.add_subcommand("compare", "Compare one invariant of two inputs");
  compare->add_option("--kind", kind, "g|catenary|tutte|characteristic|src|config")
      ->required();
  compare->add_option("file_a", file, "Matroid or invariant document")->required();
  compare->add_option("file_b", file_b, "Matroid or invariant document")->required();
  compare->callback([&] {
    action = [&] {
      const Json a = InvariantDocument(ctx, file, kind);
      const Json b = InvariantDocument(ctx, file_b, kind);
      const std::string diff = FirstDifference(a, b, kind);
      Json report = {{"kind", kind}, {"equal", diff.empty()}};
      if (!diff.empty()) report["first_difference"] = diff;
      ctx.out << Dump(report);
      return static_cast<int>(diff.empty() ? kExitOk : kExitUnequal);
    };
  });

  auto* certify = app.add_subcommand(
      "certify-pair", "Same G-invariant, different configurations for the m-cones");
  certify->add_option("--m", m, "Fiber size")->required()->check(CLI::PositiveNumber);
  certify->add_option("file_a", file, "Matroid document")->required();
  certify->add_option("file_b", file_b, "Matroid document")->required();
  certify->callback([&] {
    action = [&] {
      const Matroid a = MatroidFromJson(ReadJson(ctx, file));
      const Matroid b = MatroidFromJson(ReadJson(ctx, file_b));
      const Certificate cert = CertifyPair(a, b, m, ctx.limits);
      ctx.out << Dump(CertificateToJson(cert));
      return static_cast<int>(cert.AllPass() ? kExitOk : kExitUnequal);
    };
  });

  auto* higgs = app.add_subcommand("higgs", "Higgs lift");
  higgs->add_option("file", file, "Matroid document or -")->required();
  higgs->callback([&] {
    action = [&] {
      ctx.out << Dump(MatroidToJson(HiggsLift(MatroidFromJson(ReadJson(ctx, file)))));
      return static_cast<int>(kExitOk);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  try {
    return action();
  } catch (const GroundSetTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace mcone::cli
