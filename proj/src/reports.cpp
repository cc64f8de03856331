#include "mcb/reports.hpp"

#include <fstream>

#include "mcb/errors.hpp"

namespace mcb {

std::vector<std::string> index_names(const ModelIndexSet& m,
                                     const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != m.ambient())
    throw ConfigError("name list length does not match ambient dimension");
  std::vector<std::string> out;
  for (int j : m.indices()) out.push_back(names[j]);
  return out;
}

nlohmann::json ensemble_to_json(const BootstrapEnsemble& ens) {
  nlohmann::json models = nlohmann::json::array();
  for (const auto& m : ens.models) models.push_back(m.indices());
  std::vector<double> freq(ens.frequencies.data(), ens.frequencies.data() + ens.frequencies.size());
  return {{"B", ens.B},
          {"method", bootstrap_method_name(ens.method)},
          {"seed", ens.seed},
          {"models", models},
          {"frequencies", freq}};
}

nlohmann::json mcb_report(const Muc& muc, const McbPair& final_pair, double alpha,
                          const std::vector<std::string>& names) {
  nlohmann::json curve = nlohmann::json::array();
  for (int w = 0; w <= muc.p; ++w)
    curve.push_back({{"w", w},
                     {"w_over_p", static_cast<double>(w) / muc.p},
                     {"cr", muc.cr[w]}});
  return {{"alpha", alpha},
          {"algorithm", mcb_algorithm_name(muc.algorithm)},
          {"width", final_pair.width},
          {"lbm", index_names(final_pair.lbm, names)},
          {"ubm", index_names(final_pair.ubm, names)},
          {"bcr", final_pair.bcr},
          {"cardinality", 1ll << final_pair.width},
          {"muc", curve},
          {"amuc", amuc(muc)}};
}

nlohmann::json vscs_report(const VscsResult& result, const std::vector<std::string>& names,
                           bool include_survivors) {
  nlohmann::json lbms = nlohmann::json::array();
  for (const auto& m : result.lbms) lbms.push_back(index_names(m, names));
  nlohmann::json doc = {{"alpha", result.alpha},
                        {"cardinality", result.cardinality},
                        {"lbms", lbms},
                        {"surviving_count", static_cast<int>(result.surviving.size())}};
  if (include_survivors) {
    nlohmann::json survivors = nlohmann::json::array();
    for (const auto& m : result.surviving) survivors.push_back(index_names(m, names));
    doc["surviving"] = survivors;
  }
  return doc;
}

void write_json_file(const nlohmann::json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace mcb
