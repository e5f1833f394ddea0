#pragma once

#include <string>

#include <json.hpp>

#include "xifn/checks.hpp"
#include "xifn/products.hpp"

namespace xifn::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// CSV sampling of one Xi function on a uniform grid over the bounding box of
// F^{sigma±}: header x,y,re,im,mask with mask = 1 inside the domain.
std::string sample_csv(Algebra kind, Family fam, const Vec2i& weight, int resolution);

struct TablesReport {
    std::string text;
    nlohmann::json json;
    bool pass = true;
};

// d/eps/h values grouped by [c,a,b] zero-pattern with a PASS/FAIL comparison
// against the embedded table fixtures, plus the instantiated e- exclusions.
TablesReport make_tables_report(Algebra kind, i64 M);

struct VerifyReport {
    std::string text;
    bool pass = true;
};

// Runs one named suite or all of them, with a fixed report ordering.
VerifyReport run_verify(const CheckOptions& opt, const std::string& suite);

std::string decompose_text(Family left, Family right, const Vec2i& la, const Vec2i& lb,
                           const SignedWeightSum& sum, double check_err);
nlohmann::json decompose_json(Algebra kind, Family left, Family right, const Vec2i& la,
                              const Vec2i& lb, const SignedWeightSum& sum, double check_err);

int run_cli(int argc, const char* const* argv);

}  // namespace xifn::cli
