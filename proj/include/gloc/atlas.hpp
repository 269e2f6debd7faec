#pragma once

// Group catalog: permutation generators, optional presentation, named
// subgroup word sets, and order/outer-order metadata with provenance tags.
// Records without generators (degree 0) are stubs: names and asserted
// metadata only, for graph bookkeeping. Loading validates everything it can
// recompute: relators hold on the generators, the stabilizer chain
// reproduces the stated order, a bounded coset enumeration of the trivial
// subgroup reproduces it again when relators are given, and a normal-closure
// sweep certifies simplicity. A file that fails any check does not load.

#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bsgs.hpp"
#include "perm.hpp"
#include "todd_coxeter.hpp"
#include "word.hpp"

namespace gloc {

enum class Provenance { derived, asserted };

inline const char* to_string(Provenance p) {
  return p == Provenance::derived ? "derived" : "asserted";
}

struct TaggedValue {
  std::string digits;  // decimal; stubs may exceed 64 bits
  Provenance tag = Provenance::asserted;

  bool as_u64(std::uint64_t& out) const {
    if (digits.empty() || digits.size() > 20) return false;
    out = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') return false;
      std::uint64_t d = static_cast<std::uint64_t>(c - '0');
      if (out > (UINT64_MAX - d) / 10) return false;
      out = out * 10 + d;
    }
    return true;
  }
};

struct GroupRecord {
  std::string name;
  Point degree = 0;  // 0 = stub record
  std::vector<Perm> generators;
  Presentation presentation;  // relators may be empty
  std::vector<std::pair<std::string, std::vector<Word>>> subgroups;
  TaggedValue meta_order;
  std::optional<TaggedValue> meta_out;
  enum class Simplicity { verified, asserted } simplicity =
      Simplicity::asserted;

  bool is_stub() const { return degree == 0; }

  std::uint64_t order_u64() const {
    std::uint64_t v = 0;
    if (!meta_order.as_u64(v))
      throw std::invalid_argument("order does not fit 64 bits: " + name);
    return v;
  }
};

class AtlasError : public std::runtime_error {
 public:
  AtlasError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct SimplicityResult {
  bool verified = false;
  std::optional<Perm> witness;  // generates a proper normal subgroup
  std::uint64_t witness_closure_order = 0;
};

// Normal closure of seed inside the group generated by gens.
inline StabilizerChain normal_closure(const std::vector<Perm>& gens,
                                      const std::vector<Perm>& seed,
                                      std::uint64_t group_order) {
  std::vector<Perm> nc = seed;
  StabilizerChain chain =
      StabilizerChain::build(gens.empty() ? 1 : gens[0].degree(), nc);
  bool grew = true;
  while (grew && chain.order() < group_order) {
    grew = false;
    std::size_t sz = nc.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (const Perm& g : gens) {
        Perm y = nc[i].conj(g);
        if (!chain.contains(y)) {
          nc.push_back(y);
          chain = StabilizerChain::build(gens[0].degree(), nc);
          grew = true;
        }
      }
  }
  return chain;
}

// Exhaustive over conjugacy classes up to order 10^4, else 200 seeded random
// elements: every nontrivial normal closure must be the whole group.
inline SimplicityResult verify_simplicity(const GroupRecord& r,
                                          const StabilizerChain& chain) {
  SimplicityResult res;
  std::uint64_t order = chain.order();
  if (order <= 10000) {
    auto elems = chain.elements();
    std::unordered_map<Perm, std::size_t, PermHash> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    std::vector<bool> seen(elems.size(), false);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (seen[i] || elems[i].is_identity()) continue;
      // mark the whole conjugacy class, then test one representative
      std::vector<std::size_t> orbit{i};
      seen[i] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (const Perm& g : r.generators) {
          std::size_t j = index.at(elems[orbit[k]].conj(g));
          if (!seen[j]) {
            seen[j] = true;
            orbit.push_back(j);
          }
        }
      std::vector<Perm> class_gens;
      class_gens.reserve(orbit.size());
      for (std::size_t j : orbit) class_gens.push_back(elems[j]);
      StabilizerChain nc =
          StabilizerChain::build(r.degree, class_gens);
      if (nc.order() != order) {
        res.witness = elems[i];
        res.witness_closure_order = nc.order();
        return res;
      }
    }
    res.verified = true;
    return res;
  }
  std::mt19937_64 rng(0x5f3759df);  // fixed seed: reproducible certificate
  for (int t = 0; t < 200; ++t) {
    Perm x = chain.random_element(rng);
    if (x.is_identity()) continue;
    StabilizerChain nc = normal_closure(r.generators, {x}, order);
    if (nc.order() != order) {
      res.witness = x;
      res.witness_closure_order = nc.order();
      return res;
    }
  }
  res.verified = true;
  return res;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace detail

// Parse without validation; load_atlas validates.
inline std::vector<GroupRecord> parse_atlas(std::istream& in) {
  std::vector<GroupRecord> records;
  std::optional<GroupRecord> cur;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "group") {
      if (cur) throw AtlasError("group without end", ln);
      if (tok.size() != 4 || tok[2] != "degree")
        throw AtlasError("want: group <name> degree <n>", ln);
      GroupRecord r;
      r.name = tok[1];
      try {
        unsigned long d = std::stoul(tok[3]);
        if (d > kMaxDegree) throw std::out_of_range("");
        r.degree = static_cast<Point>(d);
      } catch (...) {
        throw AtlasError("bad degree", ln);
      }
      cur = std::move(r);
      continue;
    }
    if (!cur) throw AtlasError("directive outside group block", ln);
    if (kw == "gen") {
      if (cur->degree == 0) throw AtlasError("gen in stub record", ln);
      std::string rest = line.substr(line.find("gen") + 3);
      try {
        cur->generators.push_back(parse_cycles(rest, cur->degree));
      } catch (const ParseError& e) {
        throw AtlasError(std::string("bad cycle: ") + e.what(), ln);
      }
    } else if (kw == "rel") {
      if (cur->degree == 0) throw AtlasError("rel in stub record", ln);
      std::string rest = line.substr(line.find("rel") + 3);
      try {
        cur->presentation.relators.push_back(parse_word(rest));
      } catch (const ParseError& e) {
        throw AtlasError(std::string("bad word: ") + e.what(), ln);
      }
    } else if (kw == "sub") {
      if (cur->degree == 0) throw AtlasError("sub in stub record", ln);
      if (tok.size() < 3) throw AtlasError("want: sub <name> <words>", ln);
      std::vector<Word> words;
      std::string piece;
      try {
        for (std::size_t i = 2; i < tok.size(); ++i) {
          if (tok[i] == ",") {
            if (piece.empty()) throw ParseError("empty word", i);
            words.push_back(parse_word(piece));
            piece.clear();
          } else {
            piece += tok[i];
          }
        }
        if (piece.empty()) throw ParseError("empty word", tok.size());
        words.push_back(parse_word(piece));
      } catch (const ParseError& e) {
        throw AtlasError(std::string("bad word: ") + e.what(), ln);
      }
      cur->subgroups.emplace_back(tok[1], std::move(words));
    } else if (kw == "meta") {
      if (tok.size() != 4 || (tok[1] != "order" && tok[1] != "out") ||
          (tok[3] != "derived" && tok[3] != "asserted"))
        throw AtlasError("want: meta order|out <N> derived|asserted", ln);
      TaggedValue v;
      v.digits = tok[2];
      for (char c : v.digits)
        if (c < '0' || c > '9') throw AtlasError("bad number", ln);
      v.tag = tok[3] == "derived" ? Provenance::derived : Provenance::asserted;
      if (tok[1] == "order")
        cur->meta_order = v;
      else
        cur->meta_out = v;
    } else if (kw == "end") {
      if (cur->meta_order.digits.empty())
        throw AtlasError("record missing meta order", ln);
      records.push_back(std::move(*cur));
      cur.reset();
    } else {
      throw AtlasError("unknown directive: " + kw, ln);
    }
  }
  if (cur) throw AtlasError("unterminated group block", ln + 1);
  return records;
}

struct Atlas {
  std::vector<GroupRecord> records;
  std::unordered_map<std::string, std::size_t> by_name;

  const GroupRecord* find(const std::string& name) const {
    auto it = by_name.find(name);
    return it == by_name.end() ? nullptr : &records[it->second];
  }
  const GroupRecord& get(const std::string& name) const {
    const GroupRecord* r = find(name);
    if (!r) throw std::invalid_argument("no such group: " + name);
    return *r;
  }
};

inline StabilizerChain build_chain(const GroupRecord& r) {
  if (r.is_stub()) throw std::invalid_argument("stub has no chain: " + r.name);
  return StabilizerChain::build(r.degree, r.generators);
}

// Validate one parsed record in place (sets simplicity status).
inline void validate_record(GroupRecord& r, std::uint32_t tc_cap = 25000) {
  if (r.is_stub()) {
    if (!r.generators.empty())
      throw std::invalid_argument("stub with generators: " + r.name);
    if (r.meta_order.tag != Provenance::asserted ||
        (r.meta_out && r.meta_out->tag != Provenance::asserted))
      throw std::invalid_argument("stub metadata must be asserted: " + r.name);
    return;
  }
  if (r.generators.empty())
    throw std::invalid_argument("record without generators: " + r.name);
  for (const Perm& g : r.generators)
    if (g.degree() != r.degree)
      throw std::invalid_argument("generator degree mismatch: " + r.name);
  std::uint64_t order = r.order_u64();
  r.presentation.n_generators =
      static_cast<std::uint32_t>(r.generators.size());
  if (!check_relators(r.presentation, r.generators))
    throw std::invalid_argument("relator violation: " + r.name);
  for (const auto& [sname, words] : r.subgroups)
    for (const Word& w : words) validate_word(w, r.presentation.n_generators);
  StabilizerChain chain = build_chain(r);
  if (chain.order() != order)
    throw std::invalid_argument("order mismatch: " + r.name + " states " +
                                r.meta_order.digits + ", chain finds " +
                                std::to_string(chain.order()));
  if (!r.presentation.relators.empty() && order <= tc_cap) {
    auto tc = coset_enumerate(r.presentation, {}, 40 * tc_cap);
    if (tc.status != TcStatus::ok || tc.table.n_cosets != order)
      throw std::invalid_argument("presentation does not match order: " +
                                  r.name);
  }
  SimplicityResult s = verify_simplicity(r, chain);
  if (!s.verified)
    throw std::invalid_argument("group is not simple: " + r.name);
  r.simplicity = GroupRecord::Simplicity::verified;
}

inline Atlas load_atlas_stream(std::istream& in) {
  Atlas a;
  a.records = parse_atlas(in);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    if (!a.by_name.emplace(a.records[i].name, i).second)
      throw std::invalid_argument("duplicate group name: " + a.records[i].name);
    validate_record(a.records[i]);
  }
  return a;
}

inline Atlas load_atlas(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open atlas file: " + path);
  return load_atlas_stream(f);
}

inline std::string serialize_atlas(const std::vector<GroupRecord>& records) {
  std::string out;
  for (const GroupRecord& r : records) {
    out += "group " + r.name + " degree " + std::to_string(r.degree) + "\n";
    for (const Perm& g : r.generators) out += "gen " + to_cycles(g) + "\n";
    for (const Word& w : r.presentation.relators)
      out += "rel " + word_to_string(w) + "\n";
    for (const auto& [sname, words] : r.subgroups) {
      out += "sub " + sname;
      for (std::size_t i = 0; i < words.size(); ++i) {
        out += i ? " , " : " ";
        out += word_to_string(words[i]);
      }
      out += "\n";
    }
    out += "meta order " + r.meta_order.digits + " " +
           to_string(r.meta_order.tag) + "\n";
    if (r.meta_out)
      out += "meta out " + r.meta_out->digits + " " +
             to_string(r.meta_out->tag) + "\n";
    out += "end\n";
  }
  return out;
}

}  // namespace gloc
