#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace schub {

// A fully parsed command-line request. Words are space-separated 1-based
// generator indices ("1 2 1"); permutations are one-line notation for
// built-in type A only ("1432", or comma-separated above rank 9); subword
// masks are 0/1 strings over word positions ("11010").
struct Request {
  enum class Command { C, A, A0, Restrict, BS, Recurse, Table, Verify };

  Command command = Command::C;
  std::string type_tag;  // built-in type like "A3"; ignored if gcm_path set
  std::string gcm_path;

  std::string u_word, v_word, w_word;
  std::string u_perm, v_perm, w_perm;

  std::string theory = "H";  // H | K-ideal | K-structure
  int alpha = 0;             // recurse: optional first reflection (1-based)

  std::string q_word;  // bs: ambient word
  std::string r_mask, s_mask, j_mask, l_mask;
  bool bs_restrict_mode = false;

  std::string format = "text";  // text | json
  std::string suite = "all";    // verify: examples|braid|oracle|woodshole|all
  std::string kind = "L";       // verify braid: J|Xi|XiCirc|L|Lambda|LambdaCirc
  uint64_t seed = 1;
  int samples = 5;          // verify woodshole: samples per word
  int max_word_len = 4;     // verify woodshole: max ambient word length
  int threads = 0;          // 0 = SCHUB_THREADS or hardware
  bool enable_g2 = false;   // attempt the G2 braid for L (budgeted)
  size_t term_budget = 2'000'000;
};

// Exit code 0 on success, 1 on domain errors, 2 on verification failure.
int run_request(const Request& req, std::ostream& out, std::ostream& err);

}  // namespace schub
