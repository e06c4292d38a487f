#include "ringprob/ring_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ringprob/errors.hpp"

namespace ringprob {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::uint64_t number(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected a number, got '" + tok + "'");
  return v;
}

std::vector<Index> read_rows(const std::vector<Line>& lines, std::size_t& i, std::size_t n,
                             std::size_t header_line) {
  std::vector<Index> table;
  table.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (i >= lines.size()) fail(header_line, "table has fewer than " + std::to_string(n) + " rows");
    const auto& l = lines[i++];
    if (l.tokens.size() != n) fail(l.number, "expected " + std::to_string(n) + " entries");
    for (const auto& tok : l.tokens) {
      const auto v = number(tok, l.number);
      if (v >= n) fail(l.number, "index " + tok + " out of range");
      table.push_back(static_cast<Index>(v));
    }
  }
  return table;
}

}  // namespace

CatalogEntry parse_ring_file(std::string_view text, const BuildOptions& options) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "line 1: empty ring file");
  const auto& head = lines.front();
  if (head.tokens[0] != "ring" || head.tokens.size() != 2) fail(head.number, "expected 'ring <name>'");
  CatalogEntry entry{head.tokens[1], nullptr, Provenance::File, {}};
  if (lines.size() < 2) fail(head.number, "missing 'moduli' or 'order' line");

  const auto& second = lines[1];
  if (second.tokens[0] == "moduli") {
    StructureConstants sc;
    for (std::size_t t = 1; t < second.tokens.size(); ++t) {
      const auto d = number(second.tokens[t], second.number);
      if (d < 2) fail(second.number, "moduli must be >= 2");
      if (d > options.max_order) fail(second.number, "modulus exceeds order cap");
      sc.moduli.push_back(static_cast<Index>(d));
    }
    const std::size_t k = sc.moduli.size();
    if (k == 0) fail(second.number, "at least one modulus is required");
    sc.products.assign(k * k, std::vector<Index>(k, 0));
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const auto& l = lines[i];
      if (l.tokens[0] != "mul" || l.tokens.size() != 4 + k || l.tokens[3] != "=")
        fail(l.number, "expected 'mul i j = c1 ... c" + std::to_string(k) + "'");
      const auto a = number(l.tokens[1], l.number), b = number(l.tokens[2], l.number);
      if (a < 1 || a > k || b < 1 || b > k) fail(l.number, "basis index out of range");
      for (std::size_t t = 0; t < k; ++t) {
        const auto c = number(l.tokens[4 + t], l.number);
        if (c >= sc.moduli[t]) fail(l.number, "coordinate out of range");
        sc.products[(a - 1) * k + (b - 1)][t] = static_cast<Index>(c);
      }
    }
    entry.ring = share(FiniteRing::from_structure_constants(sc, options));
    return entry;
  }

  if (second.tokens[0] == "order") {
    if (second.tokens.size() != 2) fail(second.number, "expected 'order n'");
    const auto n = number(second.tokens[1], second.number);
    if (n == 0) fail(second.number, "order must be >= 1");
    if (n > options.max_order)
      throw Error(ErrorKind::CapExceeded, "ring order " + std::to_string(n) + " exceeds cap");
    std::size_t i = 2;
    auto expect = [&](const char* word) {
      if (i >= lines.size() || lines[i].tokens.size() != 1 || lines[i].tokens[0] != word)
        fail(i < lines.size() ? lines[i].number : lines.back().number,
             std::string("expected '") + word + "'");
      return lines[i++].number;
    };
    const auto add_line = expect("add:");
    auto add = read_rows(lines, i, n, add_line);
    const auto mul_line = expect("mul:");
    auto mul = read_rows(lines, i, n, mul_line);
    if (i != lines.size()) fail(lines[i].number, "trailing content");
    entry.ring = share(FiniteRing::from_flat_tables(n, std::move(add), std::move(mul), options));
    return entry;
  }
  fail(second.number, "expected 'moduli' or 'order'");
}

CatalogEntry load_ring_file(const std::string& path, const BuildOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open ring file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_file(buf.str(), options);
}

std::string serialize_ring(const CatalogEntry& entry) {
  const auto& r = *entry.ring;
  std::ostringstream os;
  os << "ring " << entry.name << "\n";
  if (r.basis()) {
    const auto& sc = *r.basis();
    const std::size_t k = sc.rank();
    os << "moduli";
    for (Index d : sc.moduli) os << " " << d;
    os << "\n";
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const auto& c = sc.products[i * k + j];
        bool zero = true;
        for (Index v : c) zero = zero && v == 0;
        if (zero) continue;
        os << "mul " << i + 1 << " " << j + 1 << " =";
        for (Index v : c) os << " " << v;
        os << "\n";
      }
    return os.str();
  }
  const std::size_t n = r.order();
  os << "order " << n << "\n";
  auto dump = [&](const char* label, std::span<const Index> t) {
    os << label << "\n";
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) os << (b ? " " : "") << t[a * n + b];
      os << "\n";
    }
  };
  dump("add:", r.add_table());
  dump("mul:", r.mul_table());
  return os.str();
}

}  // namespace ringprob
