#pragma once

#include <string>

#include "mcb/dataset.hpp"

namespace mcb {

/// Read a comma-delimited, headered, all-numeric CSV; the named column
/// becomes the response, the remaining columns the predictors in header
/// order. Throws CsvError (naming the row/column) on malformed input and
/// ConfigError when the response column is missing.
Dataset read_dataset_csv(const std::string& path, const std::string& response_column);

/// Write the dataset with the response as the last column. Values round-trip
/// bit-exactly through read_dataset_csv.
void write_dataset_csv(const Dataset& data, const std::string& response_name,
                       const std::string& path);

}  // namespace mcb
