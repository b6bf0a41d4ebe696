#include "oddflag/notation.hpp"

#include <charconv>
#include <stdexcept>

namespace oddflag {

namespace {

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string render_value(int v, const FlagContext& ctx, Notation notation) {
  if (notation == Notation::Bar && v > ctx.rank())
    return "b" + std::to_string(ctx.bar(v));
  return std::to_string(v);
}

std::string render_rep(const CosetRep& rep, const FlagContext& ctx, Notation notation) {
  std::string out;
  for (std::size_t k = 0; k < rep.head.size(); ++k) {
    if (k > 0) out += '|';
    out += render_value(rep.head[k], ctx, notation);
  }
  return out;
}

std::string render_degree(const DegreeVector& d) {
  std::string out = "(";
  for (int k = 0; k < d.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(d[k]);
  }
  out += ')';
  return out;
}

CosetRep parse_rep(std::string_view text, const FlagContext& ctx) {
  CosetRep rep;
  for (std::string_view token : split(text, '|')) {
    if (token.empty()) throw std::invalid_argument("empty entry in coset rep");
    if (token.front() == 'b') {
      const int k = parse_int(token.substr(1), "barred value");
      if (k < 1 || k > ctx.rank())
        throw std::invalid_argument("barred index out of range: '" + std::string(token) + "'");
      rep.head.push_back(ctx.bar(k));
    } else {
      rep.head.push_back(parse_int(token, "coset rep entry"));
    }
  }
  validate_head(rep, ctx);
  return rep;
}

DegreeVector parse_degree(std::string_view text, const FlagContext& ctx) {
  std::vector<int> entries;
  const std::size_t caret = text.find('^');
  if (caret != std::string_view::npos) {
    const int value = parse_int(text.substr(0, caret), "degree entry");
    const std::string_view count_token = text.substr(caret + 1);
    const int count = count_token == "m" ? ctx.m : parse_int(count_token, "degree repeat count");
    if (count != ctx.m)
      throw std::invalid_argument("degree vector length must equal m");
    entries.assign(count, value);
  } else {
    for (std::string_view token : split(text, ','))
      entries.push_back(parse_int(token, "degree entry"));
  }
  if (static_cast<int>(entries.size()) != ctx.m)
    throw std::invalid_argument("degree vector length must equal m");
  for (int v : entries)
    if (v < 0) throw std::invalid_argument("degree entries must be non-negative");
  return DegreeVector(std::move(entries));
}

}  // namespace oddflag
