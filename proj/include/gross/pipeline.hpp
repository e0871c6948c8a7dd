#pragma once
// End-to-end driver: one record per prime q with the class data (h, j, r, m),
// the L-value, the period, and the conjectural Sha order, plus the batch
// machinery behind the command-line tool (census, CSV tables with a JSONL
// cache, verification sweeps).

#include <optional>
#include <string>
#include <vector>

namespace gross {

inline constexpr int kSchemaVersion = 1;

inline constexpr const char* kCsvHeader =
    "q,mod8,h,j,r,m,epsilon_id,L,omega,sha_analytic,sha_rounded,abs_error,"
    "is_square,precision,X,runtime_ms";

struct PerCharDiag {
  std::string chi;
  std::string l_re, l_im, w_re, w_im;
  std::string w_residual, consistency;
};

struct RunRecord {
  int schema_version = kSchemaVersion;
  long q = 0;
  int mod8 = 0;
  long h = 0, j = 0, r = 0, m = 0;
  int epsilon_id = 0;
  std::string selection;  // "unique" | "anchor" | "integrality" | "integrality-tie"
  std::string L, omega, sha_analytic, sha_rounded, abs_error;
  bool is_square = false;
  bool integral = false;  // abs_error < 10^(-P/2)
  unsigned precision = 0;
  long X = 0;
  long runtime_ms = 0;
  std::string timestamp;  // UTC, ISO 8601
  std::string error;      // nonempty when the run failed
  std::vector<PerCharDiag> per_char;          // for the selected candidate
  std::vector<std::string> sha_candidates;    // per eps candidate (mod8 = 3)
};

std::string to_json(const RunRecord& rec);
std::optional<RunRecord> from_json(const std::string& line);

// CSV row matching kCsvHeader.  runtime_ms is printed as 0: it is the one
// nondeterministic field, and table output is required to be byte-stable.
std::string csv_row(const RunRecord& rec);

// The full computation for one q.  Throws only on usage errors (q invalid);
// numeric failures come back in rec.error.
RunRecord run_q(long q, unsigned precision);

// Primes q = 7 mod 8, q <= qmax, with r = h/j > 1; class-field data only.
std::vector<long> census_r_gt_1(long qmax);

struct TableOptions {
  int mod8 = 7;
  long qmax = 100;
  unsigned precision = 50;
  std::string out = "gross_table.csv";
  int jobs = 1;
  std::string resume;  // previous JSONL cache to reuse
};

// Writes <out> (CSV, sorted by q) and appends every completed record to
// <out>.jsonl.  Returns 0, or 2 if any row failed the integrality test, or
// 1 if any q errored, or 74 on I/O failure.
int run_table(const TableOptions& opt);

struct VerifyOptions {
  std::string suite;  // classgroup | census | lseries | anchor
  long qmax = 0;      // 0: per-suite default
  unsigned precision = 50;
};

// Prints per-check lines; returns 0 iff every check passed.
int run_verify(const VerifyOptions& opt);

}  // namespace gross
