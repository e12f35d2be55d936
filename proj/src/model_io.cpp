#include "sing/model_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "sing/error.hpp"
#include "sing/format.hpp"

namespace sing {

namespace {

constexpr std::string_view kMagic = "sing-model";
constexpr std::string_view kVersion = "1";

std::string encode_feature(const FeatureInfo& f) {
  if (!f.categorical()) return f.name;
  std::string out = f.name + "[";
  for (std::size_t c = 0; c < f.categories.size(); ++c) {
    if (c) out += ';';
    out += f.categories[c].token + "=" + format_real(f.categories[c].code);
  }
  return out + "]";
}

FeatureInfo decode_feature(std::string_view text) {
  const auto open = text.find('[');
  if (open == std::string_view::npos) return FeatureInfo{std::string(text), {}};
  if (text.back() != ']') throw ParseError("model header: bad feature '" + std::string(text) + "'");
  FeatureInfo f{std::string(text.substr(0, open)), {}};
  for (auto item : split_on(text.substr(open + 1, text.size() - open - 2), ';')) {
    const auto eq = item.rfind('=');
    if (eq == std::string_view::npos) throw ParseError("model header: bad category '" + std::string(item) + "'");
    f.categories.push_back(
        Category{std::string(item.substr(0, eq)), parse_real_field(item.substr(eq + 1), "model header")});
  }
  return f;
}

std::size_t parse_count(std::string_view field, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("model header: bad " + std::string(what) + " '" + std::string(field) + "'");
  }
  return v;
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

void write_model(std::ostream& out, const GroupStore& store) {
  const Schema& s = store.schema();
  out << kMagic << ',' << kVersion << ',' << s.feature_count() << ',' << s.class_count();
  for (const auto& f : s.features) out << ',' << encode_feature(f);
  for (const auto& c : s.class_names) out << ',' << c;
  out << '\n' << join_reals(store.delta().values()) << '\n';
  for (const auto& g : store.groups()) {
    out << g.label << ',' << (g.origin == GroupOrigin::initial ? "initial" : "relearned") << ','
        << join_reals(g.center) << '\n';
  }
}

GroupStore read_model(std::istream& in) {
  std::string header;
  if (!next_line(in, header)) throw ParseError("model: empty input");
  auto fields = split_on(header, ',');
  if (fields.size() < 4 || fields[0] != kMagic || fields[1] != kVersion) {
    throw ParseError("model: missing '" + std::string(kMagic) + "," + std::string(kVersion) + "' header");
  }
  const std::size_t m = parse_count(fields[2], "feature count");
  const std::size_t k = parse_count(fields[3], "class count");
  if (fields.size() != 4 + m + k) throw ParseError("model header: field count does not match M and K");

  Schema schema;
  for (std::size_t j = 0; j < m; ++j) schema.features.push_back(decode_feature(fields[4 + j]));
  for (std::size_t c = 0; c < k; ++c) schema.class_names.emplace_back(fields[4 + m + c]);

  std::string line;
  if (!next_line(in, line)) throw ParseError("model: missing Delta line");
  std::vector<double> delta;
  for (auto f : split_on(line, ',')) delta.push_back(parse_real_field(f, "model Delta line"));

  GroupStore store(std::move(schema), DeltaVector(std::move(delta)));
  std::size_t line_no = 2;
  while (next_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string ctx = "model line " + std::to_string(line_no);
    auto parts = split_on(line, ',');
    if (parts.size() != 2 + m) throw ParseError(ctx + ": expected " + std::to_string(2 + m) + " fields");
    Group g;
    g.label = static_cast<int>(parse_count(parts[0], "label"));
    if (parts[1] == "initial") {
      g.origin = GroupOrigin::initial;
    } else if (parts[1] == "relearned") {
      g.origin = GroupOrigin::relearned;
    } else {
      throw ParseError(ctx + ": unknown origin '" + std::string(parts[1]) + "'");
    }
    for (std::size_t j = 0; j < m; ++j) g.center.push_back(parse_real_field(parts[2 + j], ctx));
    store.add(std::move(g));
  }
  return store;
}

void save_model(const std::filesystem::path& path, const GroupStore& store) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_model(out, store);
}

GroupStore load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_model(in);
}

}  // namespace sing
