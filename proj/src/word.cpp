#include "qdim/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

namespace qdim {

Word::Word(std::size_t rank, std::span<const Syllable> syllables) : rank_(rank) {
  for (const Syllable& s : syllables) push(s);
}

Word Word::letter(std::size_t rank, std::uint32_t generator, std::int64_t exponent) {
  Word w(rank);
  w.push({generator, exponent});
  return w;
}

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (const Syllable& s : syllables_) n += static_cast<std::uint64_t>(std::llabs(s.exponent));
  return n;
}

std::vector<std::int64_t> Word::exponent_sums() const {
  std::vector<std::int64_t> sums(rank_, 0);
  for (const Syllable& s : syllables_) sums[s.generator] += s.exponent;
  return sums;
}

Word Word::inverse() const {
  Word w(rank_);
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->generator, -it->exponent});
  return w;
}

Word Word::pow(std::int64_t n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word w(rank_);
  for (std::int64_t i = 0; i < std::llabs(n); ++i) w *= base;
  return w;
}

Word& Word::push(Syllable s) {
  if (s.generator >= rank_)
    throw InputError("generator index " + std::to_string(s.generator) + " outside alphabet of rank " +
                     std::to_string(rank_));
  if (s.exponent == 0) return *this;
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
  } else {
    syllables_.push_back(s);
  }
  return *this;
}

Word& Word::operator*=(const Word& rhs) {
  if (rhs.rank_ != rank_) throw InputError("word_mul: alphabet mismatch");
  for (const Syllable& s : rhs.syllables_) push(s);
  return *this;
}

Word word_mul(const Word& u, const Word& v) { return u * v; }

Word word_inv(const Word& w) { return w.inverse(); }

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool valid_name(std::string_view name) {
  return !name.empty() && is_name_start(name.front()) &&
         std::all_of(name.begin(), name.end(), is_name_char);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Offset of `part` inside `whole`; both views must refer to the same buffer.
std::size_t offset_in(std::string_view whole, std::string_view part) {
  return static_cast<std::size_t>(part.data() - whole.data());
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> generators) {
  Word w(generators.size());
  std::size_t pos = 0;
  bool identity_token = false;
  std::size_t tokens = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    ++tokens;
    if (text[pos] == '1' && (pos + 1 == text.size() || is_space(text[pos + 1]))) {
      identity_token = true;
      ++pos;
      continue;
    }
    if (!is_name_start(text[pos])) throw ParseError("expected generator name", pos);
    std::size_t end = pos;
    while (end < text.size() && is_name_char(text[end])) ++end;
    std::string_view name = text.substr(pos, end - pos);
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end())
      throw ParseError("unknown generator '" + std::string(name) + "'", pos);
    std::int64_t exponent = 1;
    pos = end;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t exp_end = pos;
      while (exp_end < text.size() && !is_space(text[exp_end])) ++exp_end;
      std::string_view digits = text.substr(pos, exp_end - pos);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      if (!digits.empty() && digits.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (digits.empty() || ec != std::errc() || ptr != last)
        throw ParseError("malformed exponent", pos);
      if (exponent == 0) throw ParseError("zero exponent", pos);
      pos = exp_end;
    } else if (pos < text.size() && !is_space(text[pos])) {
      throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
    }
    w.push({static_cast<std::uint32_t>(it - generators.begin()), exponent});
  }
  if (identity_token && tokens > 1) throw ParseError("'1' must stand alone", 0);
  return w;
}

std::string render_word(const Word& w, std::span<const std::string> generators) {
  if (w.empty()) return "1";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += generators[s.generator];
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

void validate(const Presentation& p) {
  std::set<std::string> names;
  for (const auto& g : p.generators) {
    if (!valid_name(g)) throw InputError("invalid generator name '" + g + "'");
    if (!names.insert(g).second) throw InputError("duplicate generator name '" + g + "'");
  }
  for (const Word& r : p.relators)
    if (r.rank() != p.rank()) throw InputError("relator over a different alphabet");
}

Presentation parse_presentation(std::string_view text) {
  constexpr std::string_view kGens = "gens:";
  constexpr std::string_view kRels = "rels:";
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected ';' between gens and rels", text.size());
  std::string_view gens_part = trim(text.substr(0, semi));
  std::string_view rels_part = trim(text.substr(semi + 1));
  if (!gens_part.starts_with(kGens)) throw ParseError("expected 'gens:'", offset_in(text, gens_part));
  if (!rels_part.starts_with(kRels)) throw ParseError("expected 'rels:'", offset_in(text, rels_part));

  Presentation p;
  std::string_view names = trim(gens_part.substr(kGens.size()));
  if (!names.empty()) {
    for (std::string_view name : split(names, ',')) {
      std::string_view n = trim(name);
      if (!valid_name(n)) throw ParseError("invalid generator name", offset_in(text, name));
      p.generators.emplace_back(n);
    }
  }
  std::string_view rels = trim(rels_part.substr(kRels.size()));
  if (!rels.empty()) {
    for (std::string_view rel : split(rels, ',')) {
      try {
        p.relators.push_back(parse_word(rel, p.generators));
      } catch (const ParseError& e) {
        throw ParseError("in relator: " + e.detail(), offset_in(text, rel) + e.position());
      }
    }
  }
  validate(p);
  return p;
}

std::string render_presentation(const Presentation& p) {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " ; rels: ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += " , ";
    out += render_word(p.relators[i], p.generators);
  }
  return out;
}

}  // namespace qdim
