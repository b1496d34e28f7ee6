#include "irrforge/serialize.hpp"

#include <sstream>

#include "irrforge/treegen.hpp"

namespace irrforge {

namespace {

Json quantity_json(const std::optional<Quantity>& q) {
  if (!q) return nullptr;
  return q->to_string();
}

Json optional_int(const std::optional<std::int64_t>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string join_degrees(std::span<const int> d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

// CSV fields only need quoting when they contain a separator or quote.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

Json counterexample_json(const Counterexample& c) {
  return to_json(c.verdict, c.instance);
}

}  // namespace

Json to_json(const Tree& t) {
  Json edges = Json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back(Json::array({u, v}));
  Json j;
  j["n"] = t.order();
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const Instance& inst) {
  Json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["degrees"] = inst.degree_sequence.to_string();
  if (inst.tree) j["edges"] = to_json(*inst.tree)["edges"];
  if (inst.spine) j["spine"] = inst.spine->to_string();
  j["irr"] = optional_int(inst.irr);
  j["irr_min"] = optional_int(inst.irr_min);
  j["irr_max"] = optional_int(inst.irr_max);
  if (inst.interpretation)
    j["interpretation"] = to_string(*inst.interpretation);
  else
    j["interpretation"] = nullptr;
  return j;
}

Json to_json(const Verdict& v, const Instance& inst) {
  Json j;
  j["bound"] = v.bound_id;
  j["status"] = to_string(v.status);
  j["lhs"] = quantity_json(v.lhs);
  j["rhs"] = quantity_json(v.rhs);
  if (v.lhs && v.rhs)
    j["slack"] = v.slack_string();
  else
    j["slack"] = nullptr;
  j["mode"] = to_string(v.mode);
  j["instance"] = to_json(inst);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.links.empty()) {
    Json links = Json::array();
    for (const auto& l : v.links)
      links.push_back(Json{{"lhs", l.lhs.to_string()}, {"relation", to_string(l.relation)},
                           {"rhs", l.rhs.to_string()}, {"holds", l.holds}});
    j["links"] = std::move(links);
  }
  if (!v.params.empty()) {
    Json params = Json::object();
    for (const auto& [k, val] : v.params) params[k] = val;
    j["params"] = std::move(params);
  }
  return j;
}

Json to_json(const ExtremalResult& r) {
  auto witness = [](const Witness& w) -> Json {
    if (const auto* b = std::get_if<BackboneArrangement>(&w)) return Json{{"spine", b->to_string()}};
    const Tree& t = std::get<Tree>(w);
    Json j = to_json(t);
    j["canonical"] = canonical_form(t).bytes;
    return j;
  };
  Json j;
  j["interpretation"] = to_string(r.interpretation);
  j["min"] = r.min_value;
  j["max"] = r.max_value;
  j["spread"] = r.spread();
  j["argmin"] = witness(r.argmin);
  j["argmax"] = witness(r.argmax);
  j["instances_examined"] = r.instances_examined;
  return j;
}

Json to_json(const ScanReport& r) {
  Json space;
  space["family"] = to_string(r.space.family);
  space["n_min"] = r.space.n_min;
  space["n_max"] = r.space.n_max;
  space["max_degree"] = r.space.max_degree;
  space["interpretation"] = to_string(r.space.effective_interpretation());
  space["mode"] = to_string(r.space.mode);
  // Worker count is deliberately left out: reports must not depend on it.

  Json per_order = Json::object();
  for (const auto& [n, count] : r.instances_per_order) per_order[std::to_string(n)] = count;

  Json bounds = Json::object();
  for (const auto& id : r.bound_ids) {
    const BoundStats& s = r.stats.at(id);
    Json b;
    b["holds"] = s.holds;
    b["violated"] = s.violated;
    b["not_applicable"] = s.not_applicable;
    b["undefined"] = s.undefined;
    b["minimal_counterexample"] = s.minimal_counterexample ? counterexample_json(*s.minimal_counterexample) : Json();
    bounds[id] = std::move(b);
  }

  Json j;
  j["space"] = std::move(space);
  j["instances_per_order"] = std::move(per_order);
  j["bounds"] = std::move(bounds);
  return j;
}

Json to_json(const TableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json cells = Json::array();
    for (const auto& c : row.cells) {
      Json cj;
      cj["column"] = c.column;
      cj["ours"] = c.ours ? Json(*c.ours) : Json();
      cj["paper"] = c.paper;
      cj["status"] = to_string(c.status);
      if (!c.note.empty()) cj["note"] = c.note;
      cells.push_back(std::move(cj));
    }
    Json rj;
    rj["degrees"] = join_degrees(row.degrees);
    rj["cells"] = std::move(cells);
    rj["findings"] = row.findings;
    rows.push_back(std::move(rj));
  }
  Json findings = Json::array();
  for (const auto& f : r.findings)
    findings.push_back(Json{{"id", f.id}, {"ours", f.ours}, {"paper", f.paper}, {"status", "unreconciled"},
                            {"note", f.note}});
  Json j;
  j["table"] = r.table;
  j["interpretation"] = r.interpretation ? Json(to_string(*r.interpretation)) : Json();
  j["checksum_ok"] = r.checksum_ok;
  j["matches"] = r.count(CellStatus::Match);
  j["unreconciled"] = r.count(CellStatus::Unreconciled);
  j["rows"] = std::move(rows);
  j["findings"] = std::move(findings);
  return j;
}

std::string verdicts_csv(const std::vector<Verdict>& verdicts, const Instance& inst) {
  std::ostringstream out;
  out << "bound,status,lhs,rhs,slack,mode,n,m,degrees\n";
  for (const auto& v : verdicts) {
    out << v.bound_id << ',' << to_string(v.status) << ',' << csv_field(v.lhs ? v.lhs->to_string() : "") << ','
        << csv_field(v.rhs ? v.rhs->to_string() : "") << ',' << csv_field(v.slack_string()) << ','
        << to_string(v.mode) << ',' << inst.n << ',' << inst.m << ','
        << csv_field(inst.degree_sequence.to_string()) << '\n';
  }
  return out.str();
}

std::string verdicts_markdown(const std::vector<Verdict>& verdicts, const Instance& inst) {
  std::ostringstream out;
  out << "Instance: n = " << inst.n << ", m = " << inst.m << ", degrees " << inst.degree_sequence.to_string()
      << "\n\n";
  out << "| bound | status | lhs | rhs | slack | mode |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& v : verdicts) {
    out << "| " << v.bound_id << " | " << to_string(v.status) << " | " << (v.lhs ? v.lhs->to_string() : "")
        << " | " << (v.rhs ? v.rhs->to_string() : "") << " | " << v.slack_string() << " | " << to_string(v.mode)
        << " |\n";
  }
  return out.str();
}

std::string scan_markdown(const ScanReport& r) {
  std::ostringstream out;
  out << "Scan of " << to_string(r.space.family) << ", n in [" << r.space.n_min << ", " << r.space.n_max
      << "], " << to_string(r.space.effective_interpretation()) << ", " << to_string(r.space.mode) << " mode\n\n";
  out << "| bound | holds | violated | n/a | undefined | minimal counterexample |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& id : r.bound_ids) {
    const BoundStats& s = r.stats.at(id);
    std::string cx;
    if (s.minimal_counterexample) {
      const auto& c = *s.minimal_counterexample;
      cx = "n=" + std::to_string(c.instance.n) + " degrees " + c.instance.degree_sequence.to_string() + ": lhs " +
           (c.verdict.lhs ? c.verdict.lhs->to_string() : "-") + ", rhs " +
           (c.verdict.rhs ? c.verdict.rhs->to_string() : "-");
    }
    out << "| " << id << " | " << s.holds << " | " << s.violated << " | " << s.not_applicable << " | "
        << s.undefined << " | " << md_escape(cx) << " |\n";
  }
  return out.str();
}

std::string table_markdown(const TableReport& r) {
  std::ostringstream out;
  out << "Table " << r.table << " ("
      << (r.interpretation ? to_string(*r.interpretation) : "no interpretation") << "), fixture checksum "
      << (r.checksum_ok ? "intact" : "BROKEN") << "\n\n";
  out << "| degrees | column | ours | paper | status | note |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& row : r.rows) {
    for (const auto& c : row.cells)
      out << "| " << join_degrees(row.degrees) << " | " << c.column << " | " << c.ours.value_or("-") << " | "
          << c.paper << " | " << to_string(c.status) << " | " << md_escape(c.note) << " |\n";
  }
  bool any_row_findings = false;
  for (const auto& row : r.rows) any_row_findings |= !row.findings.empty();
  if (any_row_findings) {
    out << "\nRow notes:\n\n";
    for (const auto& row : r.rows)
      for (const auto& f : row.findings) out << "- " << join_degrees(row.degrees) << ": " << f << "\n";
  }
  out << "\nUnreconciled findings:\n\n";
  for (const auto& f : r.findings)
    out << "- " << f.id << ": ours " << f.ours << ", paper " << f.paper << ". " << f.note << "\n";
  out << "\n" << r.count(CellStatus::Match) << " cells match, " << r.count(CellStatus::Unreconciled)
      << " unreconciled\n";
  return out.str();
}

}  // namespace irrforge
