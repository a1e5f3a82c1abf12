#include <array>
#include <cctype>
#include <map>

#include "deltacompat/cli.hpp"
#include "deltacompat/error.hpp"
#include "deltacompat/expression.hpp"

namespace deltacompat::cli {

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (true) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    out.push_back({line, number++});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

// "t: t1, t2; x: x; y: y; q: q"
std::array<std::vector<std::string>, 4> parse_vars(std::string_view body, std::size_t line, std::size_t col) {
  std::array<std::vector<std::string>, 4> blocks;
  std::array<bool, 4> seen{};
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto semi = body.find(';', pos);
    std::string_view part = body.substr(pos, semi == std::string_view::npos ? semi : semi - pos);
    std::size_t at = col + pos;
    part = trim(part, &at);
    if (!part.empty()) {
      auto colon = part.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected '<block>: <names>'", line, at);
      std::string_view key = trim(part.substr(0, colon));
      const std::string keys = "txyq";
      if (key.size() != 1 || keys.find(key[0]) == std::string::npos)
        throw ParseError("unknown block '" + std::string(key) + "'", line, at);
      const std::size_t b = keys.find(key[0]);
      if (seen[b]) throw ParseError("block '" + std::string(key) + "' declared twice", line, at);
      seen[b] = true;
      std::string_view names = part.substr(colon + 1);
      std::size_t npos = 0;
      while (npos < names.size()) {
        while (npos < names.size() && (names[npos] == ',' || std::isspace(static_cast<unsigned char>(names[npos]))))
          ++npos;
        std::size_t end = npos;
        while (end < names.size() && names[end] != ',' && !std::isspace(static_cast<unsigned char>(names[end]))) ++end;
        if (end > npos) {
          std::string_view name = names.substr(npos, end - npos);
          if (!is_identifier(name))
            throw ParseError("bad variable name '" + std::string(name) + "'", line, at + colon + 1 + npos);
          blocks[b].emplace_back(name);
        }
        npos = end;
      }
    }
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return blocks;
}

class SystemBuilder {
 public:
  explicit SystemBuilder(const ContextPtr& ctx)
      : ctx_(ctx), slots_{std::vector<std::optional<RatFunc>>(ctx->l()),
                          std::vector<std::optional<RatFunc>>(ctx->m()),
                          std::vector<std::optional<RatFunc>>(ctx->n())} {}

  bool empty() const { return !any_; }

  void set(std::size_t block, std::size_t index, RatFunc value, std::size_t line, std::size_t col) {
    auto& slot = slots_[block][index];
    if (slot) throw ParseError("certificate given twice", line, col);
    slot = std::move(value);
    any_ = true;
  }

  CertificateSystem finish(std::size_t line) const {
    CertificateSystem sys{ctx_, {}, {}, {}};
    const char* letters = "uvw";
    std::array<std::vector<RatFunc>*, 3> dst{&sys.u, &sys.v, &sys.w};
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t i = 0; i < slots_[b].size(); ++i) {
        if (!slots_[b][i])
          throw ParseError(std::string("missing certificate ") + letters[b] + std::to_string(i + 1), line, 1);
        dst[b]->push_back(*slots_[b][i]);
      }
    }
    return sys;
  }

 private:
  ContextPtr ctx_;
  std::array<std::vector<std::optional<RatFunc>>, 3> slots_;
  bool any_ = false;
};

}  // namespace

InputDocument parse_document(std::string_view text, const std::optional<std::string>& ordering) {
  InputDocument doc;
  std::optional<std::pair<std::string, std::size_t>> order_line;
  std::optional<SystemBuilder> current;
  std::size_t last_line = 1;

  auto flush = [&](std::size_t line) {
    if (current && !current->empty()) doc.systems.push_back(current->finish(line));
    current.emplace(doc.ctx);
  };

  for (const auto& [raw, number] : split_lines(text)) {
    std::size_t col = 1;
    std::string_view line = trim(raw, &col);
    if (line.empty()) continue;
    last_line = number;
    if (line == "---") {
      if (!doc.ctx) throw ParseError("'---' before the vars line", number, col);
      flush(number);
      continue;
    }
    if (line.starts_with("vars") && (line.size() == 4 || std::isspace(static_cast<unsigned char>(line[4])))) {
      if (doc.ctx) throw ParseError("vars declared twice", number, col);
      auto blocks = parse_vars(line.substr(4), number, col + 4);
      auto& [t, x, y, q] = blocks;
      if (q.empty() && !y.empty()) {
        if (y.size() == 1) q.emplace_back("q");
        else
          for (std::size_t k = 0; k < y.size(); ++k) q.push_back("q" + std::to_string(k + 1));
      }
      if (q.size() != y.size()) throw ParseError("need one q name per y variable", number, col);
      try {
        doc.ctx = VarContext::make(t, x, y, q);
      } catch (const Error& e) {
        throw ParseError(e.what(), number, col);
      }
      if (ordering) doc.ctx = doc.ctx->with_ordering(*ordering);
      continue;
    }
    if (line.starts_with("order") && line.size() > 5 && std::isspace(static_cast<unsigned char>(line[5]))) {
      if (!doc.ctx) throw ParseError("order line before the vars line", number, col);
      if (order_line || current) throw ParseError("order line must follow vars directly", number, col);
      std::size_t at = col + 5;
      std::string_view spec = trim(line.substr(5), &at);
      order_line = {std::string(spec), at};
      if (!ordering) {
        try {
          doc.ctx = doc.ctx->with_ordering(spec);
        } catch (const Error& e) {
          throw ParseError(e.what(), number, at);
        }
      }
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'name = expression'", number, col);
    if (!doc.ctx) throw ParseError("certificate before the vars line", number, col);
    if (!current) current.emplace(doc.ctx);
    std::string_view name = trim(line.substr(0, eq));
    const std::string letters = "uvw";
    if (name.empty() || letters.find(name[0]) == std::string::npos)
      throw ParseError("certificate name must be u, v or w", number, col);
    const std::size_t block = letters.find(name[0]);
    const std::size_t size = block == 0 ? doc.ctx->l() : block == 1 ? doc.ctx->m() : doc.ctx->n();
    std::size_t index = 0;
    std::string_view digits = name.substr(1);
    if (digits.empty()) {
      if (size != 1) throw ParseError("certificate needs an index, e.g. " + std::string(1, name[0]) + "1", number, col);
    } else {
      for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("bad certificate name '" + std::string(name) + "'", number, col);
      index = std::stoul(std::string(digits));
      if (index == 0 || index > size)
        throw ParseError("certificate index out of range for '" + std::string(name) + "'", number, col);
      --index;
    }
    std::size_t ecol = col + eq + 1;
    std::string_view expr = trim(line.substr(eq + 1), &ecol);
    current->set(block, index, parse_expression(expr, doc.ctx, number, ecol), number, col);
  }

  if (!doc.ctx) throw ParseError("missing vars line", last_line, 1);
  if (!current) current.emplace(doc.ctx);
  if (!current->empty() || doc.systems.empty()) {
    if (current->empty() && doc.ctx->l() + doc.ctx->m() + doc.ctx->n() == 0) {
      doc.systems.push_back(CertificateSystem::trivial(doc.ctx));
    } else {
      doc.systems.push_back(current->finish(last_line));
    }
  }
  return doc;
}

}  // namespace deltacompat::cli
