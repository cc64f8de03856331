#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "mcb/bootstrap.hpp"
#include "mcb/mcb.hpp"
#include "mcb/vscs.hpp"

namespace mcb {

/// {B, method, seed, models: [[indices...]...], frequencies: [...]}
nlohmann::json ensemble_to_json(const BootstrapEnsemble& ens);

/// {alpha, algorithm, width, lbm: [names], ubm: [names], bcr, cardinality,
///  muc: [{w, w_over_p, cr}], amuc}
nlohmann::json mcb_report(const Muc& muc, const McbPair& final_pair, double alpha,
                          const std::vector<std::string>& names);

/// {alpha, cardinality, lbms: [[names]...], surviving_count}; survivors are
/// dumped under "surviving" when requested.
nlohmann::json vscs_report(const VscsResult& result, const std::vector<std::string>& names,
                           bool include_survivors = false);

std::vector<std::string> index_names(const ModelIndexSet& m,
                                     const std::vector<std::string>& names);

void write_json_file(const nlohmann::json& doc, const std::string& path);

}  // namespace mcb
