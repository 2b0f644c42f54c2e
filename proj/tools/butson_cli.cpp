/*
  Copyright 2026 The Butson Library Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

// Command-line front end over the C API. Exit codes: 0 success / verified,
// 1 refuted or conditions not met, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "butson.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;

struct GroupDeleter {
  void operator()(bh_group* g) const { bh_group_free(g); }
};
struct RowDeleter {
  void operator()(bh_row* r) const { bh_row_free(r); }
};
using GroupPtr = std::unique_ptr<bh_group, GroupDeleter>;
using RowPtr = std::unique_ptr<bh_row, RowDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  bh_string_free(s);
  return out;
}

int fail(bh_status status, const std::string& context) {
  std::cerr << context << ": " << bh_last_error() << "\n";
  switch (status) {
    case BH_ERR_CONDITIONS: return kExitRefuted;
    case BH_ERR_PARSE: return kExitInput;
    default: return kExitInput;
  }
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return true;
  }
  std::ofstream out(path);
  out << content;
  return static_cast<bool>(out);
}

int run_construct(const std::string& group, std::uint64_t h, std::int64_t beta,
                  const std::string& form_path, const std::string& out_path,
                  const std::string& format) {
  bh_group* graw = nullptr;
  bh_status st = bh_group_parse(group.c_str(), &graw);
  if (st != BH_OK) return fail(st, "group");
  GroupPtr g(graw);

  std::string form_json;
  if (!form_path.empty()) {
    std::ifstream in(form_path);
    if (!in) {
      std::cerr << "cannot read form file " << form_path << "\n";
      return kExitInput;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    form_json = buf.str();
  }

  bh_row* rraw = nullptr;
  st = bh_construct(g.get(), h, beta,
                    form_json.empty() ? nullptr : form_json.c_str(), &rraw);
  if (st != BH_OK) return fail(st, "construct");
  RowPtr row(rraw);

  // always re-verify before writing
  int verified = 0;
  st = bh_verify(row.get(), &verified, nullptr);
  if (st != BH_OK) return fail(st, "verify");
  if (!verified) {
    std::cerr << "constructed row failed verification\n";
    return kExitRefuted;
  }

  char* text = nullptr;
  st = format == "csv" ? bh_row_to_csv(row.get(), &text)
                       : bh_row_to_json(row.get(), &text);
  if (st != BH_OK) return fail(st, "serialize");
  if (!write_output(out_path, take_string(text))) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitInput;
  }
  return kExitOk;
}

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return kExitInput;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  bh_row* rraw = nullptr;
  bh_status st = bh_row_from_json(buf.str().c_str(), &rraw);
  if (st != BH_OK) return fail(st, "parse");
  RowPtr row(rraw);
  int verified = 0;
  char* report = nullptr;
  st = bh_verify(row.get(), &verified, &report);
  if (st != BH_OK) return fail(st, "verify");
  std::cout << take_string(report) << "\n";
  return verified ? kExitOk : kExitRefuted;
}

int run_exists(const std::string& group, std::uint64_t h,
               const std::string& witness_out) {
  bh_group* graw = nullptr;
  bh_status st = bh_group_parse(group.c_str(), &graw);
  if (st != BH_OK) return fail(st, "group");
  GroupPtr g(graw);
  char* verdict = nullptr;
  st = bh_exists(g.get(), h, witness_out.empty() ? 0 : 1, &verdict);
  if (st != BH_OK) return fail(st, "exists");
  std::string text = take_string(verdict);
  if (!witness_out.empty()) {
    if (!write_output(witness_out, text)) {
      std::cerr << "cannot write " << witness_out << "\n";
      return kExitInput;
    }
  }
  std::cout << text << "\n";
  return kExitOk;
}

int run_search(std::uint64_t v, std::uint64_t h, std::uint64_t limit) {
  char* result = nullptr;
  bh_status st = bh_search(v, h, limit, &result);
  if (st != BH_OK) return fail(st, "search");
  std::cout << take_string(result) << "\n";
  return kExitOk;
}

int run_table(std::uint64_t order_max, std::uint64_t h_max,
              const std::string& out_path) {
  char* csv = nullptr;
  bh_status st = bh_table(order_max, h_max, &csv);
  if (st != BH_OK) return fail(st, "table");
  if (!write_output(out_path, take_string(csv))) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitInput;
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-invariant Butson Hadamard matrices: construction, "
               "exact verification, existence, search"};
  app.require_subcommand(1);
  // keep the short -h free for the root-of-unity order option
  app.set_help_flag("--help", "print help");

  std::string group, form_path, out_path = "-", format = "json";
  std::uint64_t h = 0, v = 0, limit = 0, order_max = 0, h_max = 0;
  std::int64_t beta = 1;
  std::string witness_out, row_path;

  auto* construct = app.add_subcommand("construct", "build a matrix row");
  construct->set_help_flag("--help", "print help");
  construct->add_option("--group", group, "group spec, e.g. \"3^2 x 2 x 2\"")
      ->required();
  construct->add_option("--h", h, "root-of-unity order (default: e1)");
  construct->add_option("--beta", beta, "integer coprime to |G|");
  construct->add_option("--form", form_path, "JSON file with a custom form");
  construct->add_option("--out", out_path, "output path, - for stdout");
  construct->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "verify a row JSON file");
  verify->add_option("file", row_path, "row JSON file")->required();

  auto* exists = app.add_subcommand("exists", "existence verdict");
  exists->set_help_flag("--help", "print help");
  exists->add_option("--group", group, "group spec")->required();
  exists->add_option("--h", h, "root-of-unity order")->required();
  exists->add_option("--witness-out", witness_out, "write verdict + witness");

  auto* search = app.add_subcommand("search", "exhaustive circulant search");
  search->set_help_flag("--help", "print help");
  search->add_option("--v", v, "cyclic order")->required();
  search->add_option("--h", h, "root-of-unity order")->required();
  search->add_option("--limit", limit, "work bound (visited nodes)");

  auto* table = app.add_subcommand("table", "verdict table CSV");
  table->add_option("--order-max", order_max, "max group order")->required();
  table->add_option("--h-max", h_max, "max h")->required();
  table->add_option("--out", out_path, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (construct->parsed())
    return run_construct(group, h, beta, form_path, out_path, format);
  if (verify->parsed()) return run_verify(row_path);
  if (exists->parsed()) return run_exists(group, h, witness_out);
  if (search->parsed()) return run_search(v, h, limit);
  if (table->parsed()) return run_table(order_max, h_max, out_path);
  return kExitInput;
}
