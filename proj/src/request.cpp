#include "schub/request.hpp"

#include <memory>
#include <ostream>
#include <sstream>

#include "schub/jsonio.hpp"
#include "schub/oracle.hpp"
#include "schub/parallel.hpp"
#include "schub/verify.hpp"

namespace schub {

namespace {

// Space-separated 1-based generator indices; errors carry the token position.
Word parse_word(const std::string& s, int rank) {
  Word w;
  std::istringstream in(s);
  std::string tok;
  int pos = 0;
  while (in >> tok) {
    ++pos;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    SCHUB_REQUIRE(used == tok.size(),
                  "word position " << pos << ": expected a generator index, got '"
                                   << tok << "'");
    SCHUB_REQUIRE(v >= 1 && v <= rank,
                  "word position " << pos << ": index " << v
                                   << " outside 1.." << rank);
    w.letters.push_back(v - 1);
  }
  return w;
}

// One-line permutation: digits for n <= 9, else comma-separated values.
std::vector<int> parse_perm(const std::string& s) {
  std::vector<int> p;
  if (s.find(',') != std::string::npos) {
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      SCHUB_REQUIRE(!tok.empty(), "empty entry in permutation '" << s << "'");
      p.push_back(std::stoi(tok));
    }
  } else {
    for (char ch : s) {
      SCHUB_REQUIRE(ch >= '1' && ch <= '9',
                    "permutation '" << s << "': expected digits 1-9");
      p.push_back(ch - '0');
    }
  }
  return p;
}

struct Context {
  std::unique_ptr<WeylGroup> group;
  bool builtin_a = false;  // permutations allowed only for built-in A_n
};

Context make_group(const Request& req) {
  Context ctx;
  if (!req.gcm_path.empty()) {
    ctx.group = std::make_unique<WeylGroup>(CartanData::from_file(req.gcm_path));
  } else {
    SCHUB_REQUIRE(!req.type_tag.empty(), "need --type or --gcm");
    CartanData c = CartanData::from_type_string(req.type_tag);
    ctx.builtin_a = (std::toupper(req.type_tag[0]) == 'A');
    ctx.group = std::make_unique<WeylGroup>(std::move(c));
  }
  return ctx;
}

// An element given either as a word or as a one-line permutation; when a
// word is supplied it is also remembered for use as the summation word.
struct ElementArg {
  WeylElement elem;
  bool has_word = false;
  Word word;
};

ElementArg resolve_element(const Context& ctx, const std::string& word_str,
                           const std::string& perm_str, const char* flag) {
  const WeylGroup& g = *ctx.group;
  SCHUB_REQUIRE(word_str.empty() || perm_str.empty(),
                "give --" << flag << " or --" << flag << "-perm, not both");
  ElementArg out{g.identity(), false, Word{}};
  if (!perm_str.empty()) {
    SCHUB_REQUIRE(ctx.builtin_a,
                  "permutation input is only valid for built-in type A");
    out.elem = element_from_permutation(g, parse_perm(perm_str));
  } else if (!word_str.empty()) {
    out.word = parse_word(word_str, g.rank());
    out.has_word = true;
    out.elem = g.element_of_word(out.word);
  } else {
    throw DomainError(std::string("missing --") + flag + " (or --" + flag +
                      "-perm)");
  }
  return out;
}

Theory parse_theory(const std::string& s) {
  if (s == "H") return Theory::H;
  if (s == "K-ideal") return Theory::KIdeal;
  if (s == "K-structure") return Theory::KStructure;
  throw DomainError("unknown theory '" + s +
                    "' (expected H, K-ideal, or K-structure)");
}

OpKind parse_kind(const std::string& s) {
  if (s == "J") return OpKind::J;
  if (s == "Xi") return OpKind::Xi;
  if (s == "XiCirc") return OpKind::XiCirc;
  if (s == "L") return OpKind::L;
  if (s == "Lambda") return OpKind::Lambda;
  if (s == "LambdaCirc") return OpKind::LambdaCirc;
  throw DomainError("unknown operator kind '" + s + "'");
}

void emit_value(const Request& req, const RingValue& val,
                const nlohmann::json& meta, std::ostream& out) {
  if (req.format == "json") {
    nlohmann::json j = to_json(val);
    for (auto it = meta.begin(); it != meta.end(); ++it) j[it.key()] = *it;
    out << j.dump() << "\n";
  } else {
    out << to_string(val) << "\n";
  }
}

int run_structure_constant(const Request& req, std::ostream& out) {
  Context ctx = make_group(req);
  const WeylGroup& g = *ctx.group;
  ElementArg u = resolve_element(ctx, req.u_word, req.u_perm, "u");
  ElementArg v = resolve_element(ctx, req.v_word, req.v_perm, "v");
  ElementArg w = resolve_element(ctx, req.w_word, req.w_perm, "w");
  const Word* word = w.has_word ? &w.word : nullptr;

  RingValue val;
  if (req.command == Request::Command::C) {
    val.theory = Theory::H;
    val.h = structure_constant_H(g, u.elem, v.elem, w.elem, HVariant::DDR,
                                 word);
    val.k = KElem(g.rank());
  } else {
    val.theory = req.command == Request::Command::A ? Theory::KIdeal
                                                    : Theory::KStructure;
    val.h = HPoly(g.rank());
    val.k = structure_constant_K(g, u.elem, v.elem, w.elem, val.theory, word);
  }
  nlohmann::json meta;
  meta["u"] = word_to_json(u.elem.canonical_word());
  meta["v"] = word_to_json(v.elem.canonical_word());
  meta["w"] = word_to_json(w.elem.canonical_word());
  emit_value(req, val, meta, out);
  return 0;
}

int run_restrict(const Request& req, std::ostream& out) {
  Context ctx = make_group(req);
  const WeylGroup& g = *ctx.group;
  ElementArg v = resolve_element(ctx, req.v_word, req.v_perm, "v");
  ElementArg w = resolve_element(ctx, req.w_word, req.w_perm, "w");
  const Word* word = w.has_word ? &w.word : nullptr;
  Theory th = parse_theory(req.theory);
  RingValue val;
  val.theory = th;
  if (th == Theory::H) {
    val.h = restriction_H(g, v.elem, w.elem, word);
    val.k = KElem(g.rank());
  } else {
    val.h = HPoly(g.rank());
    val.k = restriction_K(g, v.elem, w.elem, th, word);
  }
  nlohmann::json meta;
  meta["v"] = word_to_json(v.elem.canonical_word());
  meta["w"] = word_to_json(w.elem.canonical_word());
  emit_value(req, val, meta, out);
  return 0;
}

int run_recurse(const Request& req, std::ostream& out) {
  Context ctx = make_group(req);
  const WeylGroup& g = *ctx.group;
  ElementArg u = resolve_element(ctx, req.u_word, req.u_perm, "u");
  ElementArg v = resolve_element(ctx, req.v_word, req.v_perm, "v");
  ElementArg w = resolve_element(ctx, req.w_word, req.w_perm, "w");
  RingValue val;
  val.theory = Theory::H;
  val.k = KElem(g.rank());
  if (req.alpha > 0) {
    SCHUB_REQUIRE(req.alpha <= g.rank(), "--alpha outside 1..rank");
    val.h = recursion_c_with(g, u.elem, v.elem, w.elem, req.alpha - 1);
  } else {
    val.h = recursion_c(g, u.elem, v.elem, w.elem);
  }
  nlohmann::json meta;
  meta["u"] = word_to_json(u.elem.canonical_word());
  meta["v"] = word_to_json(v.elem.canonical_word());
  meta["w"] = word_to_json(w.elem.canonical_word());
  emit_value(req, val, meta, out);
  return 0;
}

int run_bs(const Request& req, std::ostream& out) {
  Context ctx = make_group(req);
  const WeylGroup& g = *ctx.group;
  SCHUB_REQUIRE(!req.q_word.empty(), "missing --q (ambient word)");
  Word q = parse_word(req.q_word, g.rank());
  Theory th = parse_theory(req.theory);
  auto mask_arg = [&](const std::string& s, const char* flag) {
    SCHUB_REQUIRE(!s.empty(), "missing --" << flag);
    SCHUB_REQUIRE(s.size() == q.size(),
                  "--" << flag << " must have one bit per position of --q");
    return mask_from_string(s);
  };
  RingValue val;
  nlohmann::json meta;
  meta["q"] = word_to_json(q);
  if (req.bs_restrict_mode) {
    Mask j = mask_arg(req.j_mask, "j"), l = mask_arg(req.l_mask, "l");
    val = bs_restriction(g, q, j, l, th);
    meta["j"] = mask_to_string(j, q.size());
    meta["l"] = mask_to_string(l, q.size());
  } else {
    Mask r = mask_arg(req.r_mask, "r"), s = mask_arg(req.s_mask, "s"),
         j = mask_arg(req.j_mask, "j");
    val = bs_structure_constant(g, q, r, s, j, th);
    meta["r"] = mask_to_string(r, q.size());
    meta["s"] = mask_to_string(s, q.size());
    meta["j"] = mask_to_string(j, q.size());
  }
  emit_value(req, val, meta, out);
  return 0;
}

int run_table(const Request& req, std::ostream& out) {
  Context ctx = make_group(req);
  const WeylGroup& g = *ctx.group;
  Theory th = parse_theory(req.theory);
  auto elems = g.enumerate(1 << 12);
  size_t n = elems.size();
  // Stream per w so long runs are interruptible; within one w the (u,v)
  // grid is computed on the pool and printed in index order.
  for (WeylElement w : elems) {
    std::vector<RingValue> values = parallel_map<RingValue>(
        n * n,
        [&](size_t idx) {
          WeylElement u = elems[idx / n], v = elems[idx % n];
          RingValue val;
          val.theory = th;
          if (th == Theory::H) {
            val.h = structure_constant_H(g, u, v, w);
            val.k = KElem(g.rank());
          } else {
            val.h = HPoly(g.rank());
            val.k = structure_constant_K(g, u, v, w, th);
          }
          return val;
        },
        req.threads);
    for (size_t idx = 0; idx < n * n; ++idx) {
      const RingValue& val = values[idx];
      if (val.is_zero()) continue;
      WeylElement u = elems[idx / n], v = elems[idx % n];
      if (req.format == "json") {
        nlohmann::json j = to_json(val);
        j["u"] = word_to_json(u.canonical_word());
        j["v"] = word_to_json(v.canonical_word());
        j["w"] = word_to_json(w.canonical_word());
        out << j.dump() << "\n";
      } else {
        std::ostringstream uw, vw, ww;
        uw << u.canonical_word();
        vw << v.canonical_word();
        ww << w.canonical_word();
        out << "u=[" << uw.str() << "] v=[" << vw.str() << "] w=[" << ww.str()
            << "]  " << to_string(val) << "\n";
      }
    }
  }
  return 0;
}

int run_verify(const Request& req, std::ostream& out) {
  std::vector<CaseResult> results;
  auto extend = [&](std::vector<CaseResult> more) {
    for (auto& r : more) results.push_back(std::move(r));
  };

  bool all = req.suite == "all";
  SCHUB_REQUIRE(all || req.suite == "examples" || req.suite == "braid" ||
                    req.suite == "oracle" || req.suite == "woodshole",
                "unknown suite '" << req.suite << "'");

  if (all || req.suite == "examples") extend(verify_examples());

  if (all || req.suite == "braid") {
    if (req.suite == "braid" && !req.type_tag.empty()) {
      Context ctx = make_group(req);
      extend(verify_braid(*ctx.group, req.type_tag, parse_kind(req.kind),
                          req.enable_g2, req.term_budget));
    } else {
      for (const char* tag : {"A2", "B2", "D2"}) {
        WeylGroup g(CartanData::from_type_string(tag));
        for (OpKind k : {OpKind::J, OpKind::Xi, OpKind::XiCirc, OpKind::L,
                         OpKind::Lambda, OpKind::LambdaCirc}) {
          bool doubly = std::string(tag) == "B2";
          if (doubly && (k == OpKind::Lambda || k == OpKind::LambdaCirc))
            continue;  // doubly-laced braid for Lambda is conjectural
          extend(verify_braid(g, tag, k, false, req.term_budget));
        }
      }
      if (req.enable_g2) {
        WeylGroup g2(CartanData::builtin('G', 2));
        extend(verify_braid(g2, "G2", OpKind::L, true, req.term_budget));
      }
    }
  }

  if (all || req.suite == "oracle") {
    std::string tag = req.type_tag.empty() ? "A3" : req.type_tag;
    Request sub = req;
    sub.type_tag = tag;
    Context ctx = make_group(sub);
    extend(verify_oracle(*ctx.group, tag, req.seed, 24, req.threads));
  }

  if (all || req.suite == "woodshole") {
    std::string tag = req.type_tag.empty() ? "A2" : req.type_tag;
    Request sub = req;
    sub.type_tag = tag;
    Context ctx = make_group(sub);
    extend(verify_woodshole(*ctx.group, tag, req.seed, req.samples,
                            req.max_word_len, req.threads));
  }

  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  if (req.format == "json") {
    nlohmann::json j;
    j["suite"] = req.suite;
    j["pass"] = pass;
    j["cases"] = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json c;
      c["name"] = r.name;
      c["pass"] = r.pass;
      if (!r.detail.empty()) c["detail"] = r.detail;
      j["cases"].push_back(std::move(c));
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << "\n";
    }
    out << (pass ? "all checks passed" : "some checks FAILED") << " ("
        << results.size() << " cases)\n";
  }
  return pass ? 0 : 2;
}

}  // namespace

int run_request(const Request& req, std::ostream& out, std::ostream& err) {
  try {
    switch (req.command) {
      case Request::Command::C:
      case Request::Command::A:
      case Request::Command::A0:
        return run_structure_constant(req, out);
      case Request::Command::Restrict:
        return run_restrict(req, out);
      case Request::Command::Recurse:
        return run_recurse(req, out);
      case Request::Command::BS:
        return run_bs(req, out);
      case Request::Command::Table:
        return run_table(req, out);
      case Request::Command::Verify:
        return run_verify(req, out);
    }
    err << "error: unknown command\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace schub
