#include "gpcat/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gpcat {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  json parse() {
    json doc = json::object();
    json* table = &doc;
    std::vector<std::string> defined;
    while (!at_end()) {
      skip_blank();
      if (at_end()) break;
      if (peek() == '\n') {
        get();
        continue;
      }
      if (peek() == '#') {
        skip_comment();
        continue;
      }
      if (peek() == '[') {
        const std::size_t l = line_, c = col_;
        get();
        skip_blank();
        std::vector<std::string> path{parse_key()};
        skip_blank();
        while (peek() == '.') {
          get();
          skip_blank();
          path.push_back(parse_key());
          skip_blank();
        }
        expect(']');
        end_of_line();
        std::string joined;
        table = &doc;
        for (const auto& p : path) {
          joined += (joined.empty() ? "" : ".") + p;
          json& next = (*table)[p];
          if (next.is_null()) next = json::object();
          if (!next.is_object()) fail_at(l, c, "'" + joined + "' is not a table");
          table = &next;
        }
        if (std::find(defined.begin(), defined.end(), joined) != defined.end())
          fail_at(l, c, "table [" + joined + "] defined twice");
        defined.push_back(joined);
        continue;
      }
      const std::size_t l = line_, c = col_;
      std::string key = parse_key();
      skip_blank();
      expect('=');
      skip_blank();
      json value = parse_value();
      end_of_line();
      if (table->contains(key)) fail_at(l, c, "duplicate key '" + key + "'");
      (*table)[key] = std::move(value);
    }
    return doc;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    char ch = text_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }
  [[noreturn]] void fail_at(std::size_t l, std::size_t c, const std::string& msg) const {
    throw Error(ErrorKind::parse, source_ + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(line_, col_, msg); }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'" + (at_end() ? " before end of input" : ""));
    get();
  }
  void skip_blank() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
  }
  void skip_comment() {
    while (!at_end() && peek() != '\n') get();
  }
  void skip_space_and_comments() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek())))
        get();
      else if (peek() == '#')
        skip_comment();
      else
        break;
    }
  }
  void end_of_line() {
    skip_blank();
    if (peek() == '#') skip_comment();
    if (at_end()) return;
    if (peek() != '\n') fail("unexpected '" + std::string(1, peek()) + "' after value");
    get();
  }

  static bool bare_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-'; }

  std::string parse_key() {
    if (peek() == '"') return parse_string();
    std::string key;
    while (!at_end() && bare_char(peek())) key += get();
    if (key.empty()) fail(at_end() ? "expected a key before end of input" : "invalid character '" + std::string(1, peek()) + "' in key");
    return key;
  }

  std::string parse_string() {
    expect('"');
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      char ch = get();
      if (ch == '"') break;
      if (ch == '\\') {
        if (at_end()) fail("unterminated string");
        char e = get();
        switch (e) {
          case '"':
            out += '"';
            break;
          case '\\':
            out += '\\';
            break;
          case 'n':
            out += '\n';
            break;
          case 't':
            out += '\t';
            break;
          default:
            fail(std::string("unknown escape '\\") + e + "'");
        }
        continue;
      }
      out += ch;
    }
    return out;
  }

  json parse_value() {
    char ch = peek();
    if (ch == '"') return parse_string();
    if (ch == '[') return parse_array();
    if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t l = line_, c = col_;
      std::string word;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) word += get();
      if (word == "true") return true;
      if (word == "false") return false;
      fail_at(l, c, "unexpected word '" + word + "' (strings need double quotes)");
    }
    if (at_end()) fail("expected a value before end of input");
    fail("unexpected '" + std::string(1, ch) + "' where a value was expected");
  }

  json parse_number() {
    const std::size_t l = line_, c = col_;
    std::string lit;
    if (peek() == '-') lit += get();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) lit += get();
    if (lit.empty() || lit == "-") fail_at(l, c, "malformed number");
    if (peek() == '/') {
      lit += get();
      std::size_t digits = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        lit += get();
        ++digits;
      }
      if (digits == 0 || lit[lit.find('/') + 1] == '0') fail_at(l, c, "malformed rational literal '" + lit + "'");
      return lit;
    }
    if (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '.'))
      fail("malformed number (only integers and rationals p/q are allowed)");
    try {
      std::size_t used = 0;
      long long v = std::stoll(lit, &used);
      if (used == lit.size()) return v;
    } catch (const std::out_of_range&) {
    }
    return lit;
  }

  json parse_array() {
    expect('[');
    json arr = json::array();
    skip_space_and_comments();
    while (peek() != ']') {
      if (at_end()) fail("unterminated array");
      arr.push_back(parse_value());
      skip_space_and_comments();
      if (peek() == ',') {
        get();
        skip_space_and_comments();
      } else if (peek() != ']') {
        if (at_end()) fail("unterminated array");
        fail("expected ',' or ']' in array");
      }
    }
    get();
    return arr;
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\')
      out += std::string("\\") + ch;
    else if (ch == '\n')
      out += "\\n";
    else if (ch == '\t')
      out += "\\t";
    else
      out += ch;
  }
  return out + "\"";
}

std::string key_text(const std::string& k) {
  bool bare = !k.empty();
  for (char ch : k) bare = bare && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-');
  return bare ? k : quote(k);
}

std::string value_text(const json& v) {
  if (v.is_string()) return quote(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + value_text(v[i]);
    return out + "]";
  }
  throw Error(ErrorKind::argument, "cannot serialize value " + v.dump());
}

void emit_table(std::ostringstream& out, const std::string& prefix, const json& table) {
  for (const auto& [k, v] : table.items())
    if (!v.is_object()) out << key_text(k) << " = " << value_text(v) << "\n";
  for (const auto& [k, v] : table.items()) {
    if (!v.is_object()) continue;
    const std::string name = prefix.empty() ? key_text(k) : prefix + "." + key_text(k);
    out << (out.tellp() > 0 ? "\n" : "") << "[" << name << "]\n";
    emit_table(out, name, v);
  }
}

json scalar_json(const Scalar& s) {
  std::string t = s.to_string();
  if (t.find('/') == std::string::npos) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used == t.size()) return v;
    } catch (const std::out_of_range&) {
    }
  }
  return t;
}

Scalar scalar_from(const json& v, const Field& f, const std::string& where) {
  if (v.is_number_integer()) return f.parse(std::to_string(v.get<long long>()));
  if (v.is_string()) return f.parse(v.get<std::string>());
  throw Error(ErrorKind::parse, where + ": expected a number literal");
}

const json& require(const json& table, const std::string& key, const std::string& where) {
  if (!table.is_object() || !table.contains(key)) throw Error(ErrorKind::parse, where + ": missing key '" + key + "'");
  return table.at(key);
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(ErrorKind::parse, where + ": expected a string");
  return v.get<std::string>();
}

std::size_t as_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw Error(ErrorKind::parse, where + ": expected a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

Matrix matrix_from(const json& v, std::size_t rows, std::size_t cols, const Field& f, const std::string& where) {
  Matrix m(rows, cols, f);
  if (!v.is_array()) throw Error(ErrorKind::parse, where + ": expected a matrix (array of rows)");
  const std::string shape = std::to_string(rows) + " x " + std::to_string(cols);
  if (v.empty()) {
    if (rows != 0 && cols != 0) throw Error(ErrorKind::dimension, where + ": expected a " + shape + " matrix, got []");
    return m;
  }
  if (v.size() != rows) throw Error(ErrorKind::dimension, where + ": expected " + shape + ", got " + std::to_string(v.size()) + " rows");
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array() || v[r].size() != cols)
      throw Error(ErrorKind::dimension, where + ": expected " + shape + ", row " + std::to_string(r + 1) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from(v[r][c], f, where);
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::size_t object_named(const Category& c, const std::string& name, const std::string& where) {
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (c.object_name(x) == name) return x;
  throw Error(ErrorKind::validation, where + ": unknown object '" + name + "'");
}

std::size_t arrow_named(const Category& c, const std::string& name, const std::string& where) {
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    if (c.arrow(a).name == name) return a;
  throw Error(ErrorKind::validation, where + ": unknown arrow '" + name + "'");
}

std::string join_path(const std::string& dir, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_absolute() || dir.empty()) return path.lexically_normal().string();
  return (std::filesystem::path(dir) / path).lexically_normal().string();
}

}  // namespace

json parse_document(std::string_view text, const std::string& source) { return Parser(text, source).parse(); }

std::string serialize_document(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::argument, "document must be a table");
  std::ostringstream out;
  emit_table(out, "", doc);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CategoryPtr category_from_document(const json& doc, std::optional<Field> field_override) {
  const json& sec = require(doc, "category", "category file");
  const std::string where = "[category]";
  for (const auto& [k, v] : sec.items()) {
    static const std::vector<std::string> known{"objects", "arrows", "relations", "field", "length_cutoff", "name"};
    if (std::find(known.begin(), known.end(), k) == known.end()) throw Error(ErrorKind::parse, where + ": unknown key '" + k + "'");
  }
  Field field = Field::rational();
  if (sec.contains("field")) field = Field::from_name(as_string(sec["field"], where + " field"));
  if (field_override) field = *field_override;
  std::size_t cutoff = 16;
  if (sec.contains("length_cutoff")) cutoff = as_count(sec["length_cutoff"], where + " length_cutoff");
  if (cutoff == 0) throw Error(ErrorKind::validation, where + ": length_cutoff must be at least 1");

  Quiver q;
  const json& objs = require(sec, "objects", where);
  if (!objs.is_array()) throw Error(ErrorKind::parse, where + " objects: expected an array of names");
  for (const auto& o : objs) q.objects.push_back(as_string(o, where + " objects"));
  auto index = [&](const json& v, const std::string& w) {
    const std::string name = as_string(v, w);
    for (std::size_t i = 0; i < q.objects.size(); ++i)
      if (q.objects[i] == name) return i;
    throw Error(ErrorKind::validation, w + ": unknown object '" + name + "'");
  };
  if (sec.contains("arrows")) {
    const json& arrows = sec["arrows"];
    if (!arrows.is_array()) throw Error(ErrorKind::parse, where + " arrows: expected an array of [name, from, to]");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const std::string w = where + " arrow " + std::to_string(i + 1);
      const json& a = arrows[i];
      if (!a.is_array() || a.size() != 3) throw Error(ErrorKind::parse, w + ": expected [name, from, to]");
      q.arrows.push_back({as_string(a[0], w), index(a[1], w), index(a[2], w)});
    }
  }
  std::vector<Relation> rels;
  std::vector<std::vector<std::string>> words;
  if (sec.contains("relations")) {
    const json& rs = sec["relations"];
    if (!rs.is_array()) throw Error(ErrorKind::parse, where + " relations: expected an array");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string w = where + " relation " + std::to_string(i + 1);
      if (!rs[i].is_array() || rs[i].empty()) throw Error(ErrorKind::parse, w + ": expected a non-empty list of [coefficient, path]");
      Relation r;
      for (const auto& term : rs[i]) {
        if (!term.is_array() || term.size() != 2) throw Error(ErrorKind::parse, w + ": each term must be [coefficient, path]");
        Path path;
        const std::string text = as_string(term[1], w);
        std::vector<std::string> names;
        std::size_t start = 0;
        while (true) {
          std::size_t star = text.find('*', start);
          std::string token = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
          token.erase(0, token.find_first_not_of(" \t"));
          token.erase(token.find_last_not_of(" \t") + 1);
          if (token.empty()) throw Error(ErrorKind::parse, w + ": empty arrow name in path '" + text + "'");
          names.push_back(token);
          if (star == std::string::npos) break;
          start = star + 1;
        }
        for (auto it = names.rbegin(); it != names.rend(); ++it) {
          std::size_t found = q.arrows.size();
          for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].name == *it) found = a;
          if (found == q.arrows.size()) throw Error(ErrorKind::validation, w + ": unknown arrow '" + *it + "'");
          path.push_back(found);
        }
        r.terms.push_back({scalar_from(term[0], field, w), path});
      }
      rels.push_back(std::move(r));
    }
  }
  return Category::build(std::move(q), std::move(rels), field, cutoff);
}

json category_to_document(const Category& c) {
  json sec;
  json objs = json::array();
  for (std::size_t x = 0; x < c.object_count(); ++x) objs.push_back(c.object_name(x));
  sec["objects"] = objs;
  json arrows = json::array();
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    arrows.push_back({c.arrow(a).name, c.object_name(c.arrow(a).source), c.object_name(c.arrow(a).target)});
  sec["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : c.relations()) {
    json terms = json::array();
    for (const auto& t : r.terms) {
      std::string word;
      for (auto it = t.path.rbegin(); it != t.path.rend(); ++it) word += (word.empty() ? "" : "*") + c.arrow(*it).name;
      terms.push_back({scalar_json(t.coefficient), word});
    }
    rels.push_back(terms);
  }
  sec["relations"] = rels;
  sec["field"] = c.field().name();
  sec["length_cutoff"] = c.length_cutoff();
  return {{"category", sec}};
}

CategoryPtr load_category(const std::string& path, std::optional<Field> field_override) {
  return category_from_document(parse_document(read_file(path), path), field_override);
}

LoadedRepresentation representation_from_document(const json& doc, const std::string& directory,
                                                  std::optional<Field> field_override) {
  const json& sec = require(doc, "representation", "representation file");
  for (const auto& [k, v] : doc.items()) {
    static const std::vector<std::string> known{"representation", "dims", "arrows", "base_arrows"};
    if (std::find(known.begin(), known.end(), k) == known.end()) throw Error(ErrorKind::parse, "unknown section [" + k + "]");
  }
  LoadedRepresentation out;
  out.category_path = as_string(require(sec, "category", "[representation]"), "[representation] category");
  if (sec.contains("base")) out.base_path = as_string(sec["base"], "[representation] base");
  std::string side = "left";
  if (sec.contains("side")) side = as_string(sec["side"], "[representation] side");
  if (side != "left" && side != "right") throw Error(ErrorKind::parse, "[representation] side must be \"left\" or \"right\"");
  out.right = side == "right";

  const std::string cpath = join_path(directory, out.category_path);
  CategoryPtr c = load_category(cpath, field_override);
  out.files.push_back(cpath);
  CategoryPtr base = Category::unit(c->field());
  if (!out.base_path.empty()) {
    const std::string bpath = join_path(directory, out.base_path);
    base = load_category(bpath, field_override);
    out.files.push_back(bpath);
    if (!(base->field() == c->field()))
      throw Error(ErrorKind::field_mismatch, "category over " + c->field().name() + " but base over " + base->field().name());
  }
  if (out.right && !out.base_path.empty()) throw Error(ErrorKind::validation, "right modules with a base algebra are not supported");
  CategoryPtr cm = out.right ? opposite(*c) : c;
  CategoryPtr total = out.base_path.empty() ? cm : tensor_category(*c, *base);
  const std::size_t nb = base->object_count();
  const bool has_base = !out.base_path.empty();
  const Field f = c->field();

  std::vector<std::size_t> dims(total->object_count(), 0);
  const json empty = json::object();
  const json& dsec = doc.contains("dims") ? doc["dims"] : empty;
  for (const auto& [name, v] : dsec.items()) {
    const std::string w = "[dims] " + name;
    const std::size_t x = object_named(*c, name, "[dims]");
    if (v.is_array()) {
      if (v.size() != nb) throw Error(ErrorKind::dimension, w + ": expected " + std::to_string(nb) + " entries (one per base object)");
      for (std::size_t b = 0; b < nb; ++b) dims[x * nb + b] = as_count(v[b], w);
    } else {
      if (has_base) throw Error(ErrorKind::parse, w + ": expected one dimension per base object");
      dims[x] = as_count(v, w);
    }
  }

  std::vector<Matrix> arrows(total->arrow_count());
  std::vector<bool> set(total->arrow_count(), false);
  auto split = [&](const std::string& key, const std::string& w) {
    const std::size_t at = key.rfind('@');
    if (at == std::string::npos) {
      if (has_base) throw Error(ErrorKind::parse, w + ": key must name an arrow and an object as \"arrow@object\"");
      return std::pair<std::string, std::string>{key, ""};
    }
    return std::pair<std::string, std::string>{key.substr(0, at), key.substr(at + 1)};
  };
  const json& asec = doc.contains("arrows") ? doc["arrows"] : empty;
  for (const auto& [key, v] : asec.items()) {
    const std::string w = "[arrows] " + key;
    auto [aname, bname] = split(key, w);
    const std::size_t a = arrow_named(*cm, aname, w);
    const std::size_t b = bname.empty() ? 0 : object_named(*base, bname, w);
    const std::size_t t = has_base ? total_arrow_of_c(*base, a, b) : a;
    const auto& ar = total->arrow(t);
    arrows[t] = matrix_from(v, dims[ar.target], dims[ar.source], f, w);
    set[t] = true;
  }
  const json& bsec = doc.contains("base_arrows") ? doc["base_arrows"] : empty;
  if (!has_base && !bsec.empty()) throw Error(ErrorKind::parse, "[base_arrows] given without a base algebra");
  for (const auto& [key, v] : bsec.items()) {
    const std::string w = "[base_arrows] " + key;
    auto [bname, xname] = split(key, w);
    const std::size_t beta = arrow_named(*base, bname, w);
    const std::size_t x = object_named(*c, xname, w);
    const std::size_t t = total_arrow_of_base(*c, *base, x, beta);
    const auto& ar = total->arrow(t);
    arrows[t] = matrix_from(v, dims[ar.target], dims[ar.source], f, w);
    set[t] = true;
  }
  for (std::size_t t = 0; t < total->arrow_count(); ++t)
    if (!set[t]) arrows[t] = Matrix(dims[total->arrow(t).target], dims[total->arrow(t).source], f);
  Module m(total, dims, std::move(arrows));
  out.rep = Representation(cm, base, total, std::move(m));
  return out;
}

LoadedRepresentation load_representation(const std::string& path, std::optional<Field> field_override) {
  json doc = parse_document(read_file(path), path);
  LoadedRepresentation r = representation_from_document(doc, std::filesystem::path(path).parent_path().string(), field_override);
  r.files.insert(r.files.begin(), path);
  return r;
}

json representation_to_document(const Representation& rep, const std::string& category_path, const std::string& base_path,
                                bool right) {
  const Category& c = rep.category();
  const Category& base = rep.base();
  const bool has_base = rep.has_base();
  const std::size_t nb = base.object_count();
  json sec;
  sec["category"] = category_path;
  if (has_base) sec["base"] = base_path;
  if (right) sec["side"] = "right";
  json dims = json::object();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    if (has_base) {
      json v = json::array();
      for (std::size_t b = 0; b < nb; ++b) v.push_back(rep.dim(x, b));
      dims[c.object_name(x)] = v;
    } else {
      dims[c.object_name(x)] = rep.dim(x, 0);
    }
  }
  json doc;
  doc["representation"] = sec;
  doc["dims"] = dims;
  json arrows = json::object();
  const Module& m = rep.module();
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      const std::size_t t = has_base ? total_arrow_of_c(base, a, b) : a;
      if (m.arrow_map(t).empty()) continue;
      arrows[has_base ? c.arrow(a).name + "@" + base.object_name(b) : c.arrow(a).name] = matrix_json(m.arrow_map(t));
    }
  if (!arrows.empty()) doc["arrows"] = arrows;
  if (has_base) {
    json barrows = json::object();
    for (std::size_t beta = 0; beta < base.arrow_count(); ++beta)
      for (std::size_t x = 0; x < c.object_count(); ++x) {
        const std::size_t t = total_arrow_of_base(c, base, x, beta);
        if (m.arrow_map(t).empty()) continue;
        barrows[base.arrow(beta).name + "@" + c.object_name(x)] = matrix_json(m.arrow_map(t));
      }
    if (!barrows.empty()) doc["base_arrows"] = barrows;
  }
  return doc;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::io, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

}  // namespace gpcat
