// Command-line front end: parses varieties and weights, runs the library,
// and renders one payload per invocation as text, json, csv, or markdown.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ulrich/serialize.hpp"

namespace {

using ulrich::Json;

enum class Format { text, json, csv, md };

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += csv_escape(fields[i]);
  }
  return out;
}

std::string join_md(const std::vector<std::string>& fields) {
  std::string out = "|";
  for (const auto& f : fields) out += " " + f + " |";
  return out;
}

std::string md_separator(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += " --- |";
  return out;
}

std::string int_list(const Json& values) {  // {1, 2, 3}
  std::string out = "{";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ", ";
    out += v.dump();
    first = false;
  }
  return out + "}";
}

std::string coord_list(const Json& values) {  // [1,0,2]
  std::string out = "[";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ",";
    out += v.dump();
    first = false;
  }
  return out + "]";
}

std::string coord_spaced(const Json& values) {  // "1 0 2", csv-friendly
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += " ";
    out += v.dump();
    first = false;
  }
  return out;
}

std::string num_str(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_aligned(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size(), ' ');
    }
    os << line << "\n";
  }
}

void render_rows(std::ostream& os, Format fmt, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  switch (fmt) {
    case Format::text: {
      auto all = rows;
      all.insert(all.begin(), header);
      print_aligned(os, all);
      break;
    }
    case Format::csv: {
      os << join_csv(header) << "\n";
      for (const auto& r : rows) os << join_csv(r) << "\n";
      break;
    }
    case Format::md: {
      os << join_md(header) << "\n" << md_separator(header.size()) << "\n";
      for (const auto& r : rows) os << join_md(r) << "\n";
      break;
    }
    case Format::json:
      throw ulrich::internal_error("render_rows: json handled separately");
  }
}

std::string weights_summary(const Json& certs) {
  if (certs.empty()) return "(none)";
  std::string out;
  for (const auto& c : certs) {
    if (!out.empty()) out += " ";
    out += c.at("weight_expr").get<std::string>();
  }
  return out;
}

void render_roots(std::ostream& os, Format fmt, const Json& p) {
  if (fmt == Format::text)
    os << p.at("variety").get<std::string>() << ": dim " << num_str(p.at("dim")) << ", index "
       << num_str(p.at("index")) << ", " << p.at("positive_roots").size()
       << " positive roots\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : p.at("positive_roots")) {
    const bool spaced = fmt == Format::csv;
    rows.push_back({spaced ? coord_spaced(r.at("root")) : coord_list(r.at("root")),
                    spaced ? coord_spaced(r.at("coroot")) : coord_list(r.at("coroot")),
                    num_str(r.at("height")), r.at("radical").get<bool>() ? "yes" : "no"});
  }
  render_rows(os, fmt, {"root", "coroot", "height", "radical"}, rows);
}

void render_sing(std::ostream& os, Format fmt, const Json& p) {
  if (p.contains("symbolic")) {
    if (fmt == Format::text) {
      for (const auto& f : p.at("forms")) os << f.at("text").get<std::string>() << "\n";
      return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : p.at("forms"))
      rows.push_back({f.at("text").get<std::string>(), f.at("latex").get<std::string>(),
                      f.at("constant").get<std::string>(), num_str(f.at("denominator"))});
    render_rows(os, fmt, {"form", "latex", "constant", "denominator"}, rows);
    return;
  }
  if (fmt == Format::text) {
    os << "Sing(" << p.at("weight_expr").get<std::string>() << ") on "
       << p.at("variety").get<std::string>() << " = " << int_list(p.at("sing")) << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : p.at("sing")) rows.push_back({t.dump()});
  render_rows(os, fmt, {"t"}, rows);
}

void render_bwb(std::ostream& os, Format fmt, const Json& p) {
  const bool vanishes = p.at("vanishes").get<bool>();
  if (fmt == Format::text) {
    os << "E_{" << p.at("weight_expr").get<std::string>() << "}(-" << num_str(p.at("twist"))
       << ") on " << p.at("variety").get<std::string>() << ": ";
    if (vanishes)
      os << "all cohomology vanishes\n";
    else
      os << "nonvanishing in degree " << num_str(p.at("degree")) << ", dual highest weight "
         << p.at("dual_highest_weight_expr").get<std::string>() << "\n";
    return;
  }
  std::vector<std::string> row{p.at("variety").get<std::string>(),
                               p.at("weight_expr").get<std::string>(), num_str(p.at("twist")),
                               vanishes ? "yes" : "no", vanishes ? "" : num_str(p.at("degree")),
                               vanishes ? ""
                                        : p.at("dual_highest_weight_expr").get<std::string>()};
  render_rows(os, fmt, {"variety", "weight", "twist", "vanishes", "degree", "dual_weight"},
              {row});
}

void render_certificates(std::ostream& os, Format fmt, const std::string& variety,
                         const Json& certs) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : certs)
    rows.push_back({variety, c.at("weight_expr").get<std::string>(), num_str(c.at("rank")),
                    num_str(c.at("dim")), num_str(c.at("index"))});
  render_rows(os, fmt, {"variety", "weight", "rank", "dim", "index"}, rows);
}

void render_classify(std::ostream& os, Format fmt, const Json& p) {
  if (p.contains("results")) {  // the exceptional sweep
    if (fmt == Format::text) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : p.at("results"))
        rows.push_back({r.at("variety").get<std::string>(), num_str(r.at("dim")),
                        num_str(r.at("index")), weights_summary(r.at("certificates"))});
      rows.insert(rows.begin(), {"variety", "dim", "index", "ulrich weights"});
      print_aligned(os, rows);
      return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : p.at("results"))
      for (const auto& c : r.at("certificates"))
        rows.push_back({r.at("variety").get<std::string>(),
                        c.at("weight_expr").get<std::string>(), num_str(c.at("rank")),
                        num_str(c.at("dim")), num_str(c.at("index"))});
    render_rows(os, fmt, {"variety", "weight", "rank", "dim", "index"}, rows);
    return;
  }
  const auto variety = p.at("variety").get<std::string>();
  if (fmt == Format::text) {
    os << variety << ": dim " << num_str(p.at("dim")) << ", index " << num_str(p.at("index"))
       << "\n";
    if (p.at("certificates").empty()) {
      os << "no Ulrich weights\n";
      return;
    }
    for (const auto& c : p.at("certificates"))
      os << "weight " << c.at("weight_expr").get<std::string>() << ", rank "
         << num_str(c.at("rank")) << ", Sing = " << int_list(c.at("sing")) << "\n";
    return;
  }
  render_certificates(os, fmt, variety, p.at("certificates"));
}

void render_rank(std::ostream& os, Format fmt, const Json& p) {
  if (fmt == Format::text) {
    os << "rank E_{" << p.at("weight_expr").get<std::string>() << "} on "
       << p.at("variety").get<std::string>() << " = " << num_str(p.at("rank")) << "\n";
    return;
  }
  render_rows(os, fmt, {"variety", "weight", "rank"},
              {{p.at("variety").get<std::string>(), p.at("weight_expr").get<std::string>(),
                num_str(p.at("rank"))}});
}

void render_check(std::ostream& os, Format fmt, const Json& p) {
  const bool ulrich = p.at("ulrich").get<bool>();
  if (fmt == Format::text) {
    os << "E_{" << p.at("weight_expr").get<std::string>() << "} on "
       << p.at("variety").get<std::string>() << " is " << (ulrich ? "Ulrich" : "not Ulrich")
       << ", Sing = " << int_list(p.at("sing")) << ", dim = " << num_str(p.at("dim")) << "\n";
    return;
  }
  render_rows(os, fmt, {"variety", "weight", "ulrich", "dim"},
              {{p.at("variety").get<std::string>(), p.at("weight_expr").get<std::string>(),
                ulrich ? "yes" : "no", num_str(p.at("dim"))}});
}

void render_table(std::ostream& os, Format fmt, const Json& p) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : p.at("rows"))
    rows.push_back({r.at("variety").get<std::string>(), num_str(r.at("dim")),
                    num_str(r.at("index")), weights_summary(r.at("certificates"))});
  render_rows(os, fmt, {"variety", "dim", "index", "ulrich_weights"}, rows);
}

void render(std::ostream& os, Format fmt, const Json& payload) {
  if (fmt == Format::json) {
    os << payload.dump(2) << "\n";
    return;
  }
  const auto cmd = payload.at("command").get<std::string>();
  if (cmd == "roots")
    render_roots(os, fmt, payload);
  else if (cmd == "sing")
    render_sing(os, fmt, payload);
  else if (cmd == "bwb")
    render_bwb(os, fmt, payload);
  else if (cmd == "classify")
    render_classify(os, fmt, payload);
  else if (cmd == "rank")
    render_rank(os, fmt, payload);
  else if (cmd == "check")
    render_check(os, fmt, payload);
  else if (cmd == "table")
    render_table(os, fmt, payload);
  else
    throw ulrich::internal_error("unknown payload command " + cmd);
}

// Weight input: either an expression (--weight) or a coordinate vector
// (--weight-vec). Defaults to the zero weight.
ulrich::Weight read_weight(const std::string& expr, const std::string& vec, int rank) {
  if (!vec.empty()) {
    std::vector<std::int64_t> coords;
    std::stringstream ss(vec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        coords.push_back(std::stoll(item, &used));
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
          ++used;
        if (used != item.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad coordinate '" + item + "' in weight vector");
      }
    }
    if (static_cast<int>(coords.size()) != rank)
      throw std::invalid_argument("weight vector has " + std::to_string(coords.size()) +
                                  " coordinates, expected " + std::to_string(rank));
    return ulrich::Weight(std::move(coords));
  }
  return ulrich::parse_weight(expr, rank);
}

const std::vector<ulrich::DynkinType>& exceptional_types() {
  static const std::vector<ulrich::DynkinType> types = {
      {ulrich::Series::G, 2}, {ulrich::Series::F, 4}, {ulrich::Series::E, 6},
      {ulrich::Series::E, 7}, {ulrich::Series::E, 8}};
  return types;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Ulrich bundles on rational homogeneous varieties G/P_k"};
  app.require_subcommand(1);
  // Let global options such as --format appear after the subcommand too.
  app.fallthrough();

  Format format = Format::text;
  const std::map<std::string, Format> format_names{{"text", Format::text},
                                                   {"json", Format::json},
                                                   {"csv", Format::csv},
                                                   {"md", Format::md}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->envname("ULRICH_FORMAT");

  std::string variety_arg, weight_arg, weight_vec_arg;
  std::int64_t twist = 0;
  int jobs = 0;
  bool symbolic = false, all_exceptional = false;

  auto* roots = app.add_subcommand("roots", "Positive roots and coroots of the ambient group");
  roots->fallthrough();
  roots->add_option("variety", variety_arg, "Variety G/P_k, e.g. E6/P1")->required();

  auto* sing = app.add_subcommand("sing", "Singular twists of a bundle weight");
  sing->fallthrough();
  sing->add_option("variety", variety_arg)->required();
  auto* sw = sing->add_option("--weight", weight_arg, "Weight expression, e.g. w5+3w6");
  auto* swv = sing->add_option("--weight-vec", weight_vec_arg, "Comma-separated coordinates");
  sw->excludes(swv);
  auto* sflag =
      sing->add_flag("--symbolic", symbolic, "Print the affine forms instead of values");
  sflag->excludes(sw);
  sflag->excludes(swv);

  auto* bwb = app.add_subcommand("bwb", "Cohomology of a twisted bundle");
  bwb->fallthrough();
  bwb->add_option("variety", variety_arg)->required();
  auto* bw = bwb->add_option("--weight", weight_arg);
  auto* bwv = bwb->add_option("--weight-vec", weight_vec_arg);
  bw->excludes(bwv);
  bwb->add_option("--twist", twist, "Twist t of E_omega(-t)")->required();

  auto* classify = app.add_subcommand("classify", "All Ulrich weights on a variety");
  classify->fallthrough();
  classify->add_option("variety", variety_arg);
  classify->add_flag("--all-exceptional", all_exceptional,
                     "Sweep the 27 exceptional G/P_k");
  classify->add_option("--jobs", jobs, "Worker threads, 0 = hardware");

  auto* rank = app.add_subcommand("rank", "Rank of the bundle E_omega");
  rank->fallthrough();
  rank->add_option("variety", variety_arg)->required();
  auto* rw = rank->add_option("--weight", weight_arg);
  auto* rwv = rank->add_option("--weight-vec", weight_vec_arg);
  rw->excludes(rwv);

  auto* check = app.add_subcommand("check", "Decide whether E_omega is Ulrich");
  check->fallthrough();
  check->add_option("variety", variety_arg)->required();
  auto* cw = check->add_option("--weight", weight_arg);
  auto* cwv = check->add_option("--weight-vec", weight_vec_arg);
  cw->excludes(cwv);

  auto* table = app.add_subcommand("table", "Summary of the 27 exceptional cases");
  table->fallthrough();
  table->add_option("--jobs", jobs, "Worker threads, 0 = hardware");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Json payload;
    if (roots->parsed()) {
      const auto v = ulrich::parse_variety(variety_arg);
      const auto rs = ulrich::RootSystem::build(v.type);
      payload = ulrich::root_system_payload(rs, v);
    } else if (sing->parsed()) {
      const auto v = ulrich::parse_variety(variety_arg);
      const auto rs = ulrich::RootSystem::build(v.type);
      if (symbolic) {
        payload = ulrich::sing_symbolic_payload(rs, v, ulrich::sing_forms(rs, v.k));
      } else {
        const auto w = read_weight(weight_arg, weight_vec_arg, rs.rank());
        payload = ulrich::sing_payload(rs, v, w, ulrich::sing_set(rs, v.k, w));
      }
    } else if (bwb->parsed()) {
      const auto v = ulrich::parse_variety(variety_arg);
      const auto rs = ulrich::RootSystem::build(v.type);
      const auto w = read_weight(weight_arg, weight_vec_arg, rs.rank());
      payload = ulrich::bwb_payload(v, w, twist, ulrich::cohomology(rs, v.k, w, twist));
    } else if (classify->parsed()) {
      if (all_exceptional) {
        if (!variety_arg.empty())
          throw std::invalid_argument("--all-exceptional takes no variety argument");
        payload["schema_version"] = ulrich::kSchemaVersion;
        payload["command"] = "classify";
        payload["all_exceptional"] = true;
        Json results = Json::array();
        for (const auto& type : exceptional_types()) {
          const auto rs = ulrich::RootSystem::build(type);
          for (int k = 1; k <= type.rank; ++k) {
            const ulrich::VarietySpec v{type, k};
            Json r;
            r["variety"] = v.to_string();
            r["dim"] = rs.dim(k);
            r["index"] = rs.fano_index(k);
            Json cs = Json::array();
            for (const auto& c : ulrich::classify(rs, k, jobs))
              cs.push_back(ulrich::certificate_to_json(c));
            r["certificates"] = std::move(cs);
            results.push_back(std::move(r));
          }
        }
        payload["results"] = std::move(results);
      } else {
        if (variety_arg.empty())
          throw std::invalid_argument("specify a variety or --all-exceptional");
        const auto v = ulrich::parse_variety(variety_arg);
        const auto rs = ulrich::RootSystem::build(v.type);
        payload = ulrich::classify_payload(rs, v, ulrich::classify(rs, v.k, jobs));
      }
    } else if (rank->parsed()) {
      const auto v = ulrich::parse_variety(variety_arg);
      const auto rs = ulrich::RootSystem::build(v.type);
      const auto w = read_weight(weight_arg, weight_vec_arg, rs.rank());
      payload = ulrich::rank_payload(v, w, ulrich::bundle_rank(rs, v.k, w));
    } else if (check->parsed()) {
      const auto v = ulrich::parse_variety(variety_arg);
      const auto rs = ulrich::RootSystem::build(v.type);
      const auto w = read_weight(weight_arg, weight_vec_arg, rs.rank());
      const auto s = ulrich::sing_set(rs, v.k, w);
      payload = ulrich::check_payload(rs, v, w, s, ulrich::is_ulrich(rs, v.k, w));
    } else if (table->parsed()) {
      payload["schema_version"] = ulrich::kSchemaVersion;
      payload["command"] = "table";
      Json rows = Json::array();
      for (const auto& type : exceptional_types()) {
        const auto rs = ulrich::RootSystem::build(type);
        for (int k = 1; k <= type.rank; ++k) {
          const ulrich::VarietySpec v{type, k};
          Json r;
          r["variety"] = v.to_string();
          r["dim"] = rs.dim(k);
          r["index"] = rs.fano_index(k);
          Json cs = Json::array();
          for (const auto& c : ulrich::classify(rs, k, jobs))
            cs.push_back(ulrich::certificate_to_json(c));
          r["certificates"] = std::move(cs);
          rows.push_back(std::move(r));
        }
      }
      payload["rows"] = std::move(rows);
    }
    render(std::cout, format, payload);
    return 0;
  } catch (const ulrich::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const ulrich::ParseError& e) {
    std::cerr << "error: " << e.what() << " (at offset " << e.position << ")\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
