#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "irrforge/bounds.hpp"
#include "irrforge/extremal.hpp"
#include "irrforge/falsifier.hpp"
#include "irrforge/report.hpp"

namespace irrforge {

using Json = nlohmann::ordered_json;

Json to_json(const Tree& t);
Json to_json(const Instance& inst);
Json to_json(const Verdict& v, const Instance& inst);
Json to_json(const ExtremalResult& r);
Json to_json(const ScanReport& r);
Json to_json(const TableReport& r);

std::string verdicts_csv(const std::vector<Verdict>& verdicts, const Instance& inst);
std::string verdicts_markdown(const std::vector<Verdict>& verdicts, const Instance& inst);
std::string scan_markdown(const ScanReport& r);
std::string table_markdown(const TableReport& r);

}  // namespace irrforge
