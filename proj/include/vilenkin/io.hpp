#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vilenkin/hardy.hpp"
#include "vilenkin/record.hpp"
#include "vilenkin/spectral.hpp"

namespace vilenkin {

/// {"m":[...],"resolution":N,"values":[[re,im],...]}; "m" lists every level of the group.
std::string grid_to_json(const GridFunction& f);
GridFunction grid_from_json(std::string_view text);

/// {"m":[...],"levels":[...],"entries":[GridFunction,...]}.
std::string martingale_to_json(const StepMartingale& mart);
StepMartingale martingale_from_json(std::string_view text);

/// JSON array of records; non-finite numbers are written as "inf", "-inf" or "nan".
std::string records_to_json(std::span<const VerificationRecord> records);
std::vector<VerificationRecord> records_from_json(std::string_view text);
/// One row per record; params flattened as k=v joined by ';'.
std::string records_to_csv(std::span<const VerificationRecord> records);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
/// Array of objects keyed by the header; cells that parse fully as numbers are written as numbers.
std::string to_json(const Table& t);

std::string read_text(const std::string& path);
/// Writes to the path, or to stdout when the path is empty or "-".
void write_text(const std::string& path, std::string_view text);

} // namespace vilenkin
