#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace braidhom::cli {

// Fully resolved job: every default is filled in before the job runs, so the
// echoed header reproduces the run exactly.
struct JobSpec {
  std::string subcommand;
  std::string group;              // builtin name or group file
  std::string classes = "all";    // class selector
  bool rank1 = false;             // rank-one space instead of a rack space
  std::string sigma = "1";        // braiding scalar of the rank-one space
  std::string cocycle = "1";      // constant rack cocycle
  bool epsilon = false;
  std::string field = "Q";
  std::size_t nmax = 0, pmax = 0, qmax = 0;
  std::size_t cap = 10'000'000;
  std::string stratum;            // koszul: lattice index of H, empty for R
  bool multigraded = false;
  bool nielsen = false;           // betti: Nielsen-class coefficients
  bool check = false;             // koszul: verify the identities too
  std::string betti_file;         // bound: CSV with columns n,j,rank
  std::string q;                  // bound: prime power
  std::size_t d = 0;              // bound: exponent of n
  std::string output;             // file path, stdout when empty
  std::string format = "csv";

  nlohmann::ordered_json to_json() const;
};

// Exit codes: 0 success, 1 verification failure or internal error, 2 usage
// error (bad flags, unknown group or classes, caps).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidhom::cli
