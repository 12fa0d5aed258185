#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgx/cgx.hpp"

namespace cgx::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  long long d = 0;
  std::string number;
  std::string digits;
  std::size_t count = 1;
  std::size_t max = 10;
  unsigned places = 8;
  bool verify = false;
  bool strict = false;
  bool unicode = false;
};

BigInt parse_number(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError("expected a non-negative decimal integer, got \"" + text + "\"");
  }
  return BigInt(text);
}

CoefficientSequence parse_sequence(const std::string& text) {
  try {
    return parse_digits(text);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

std::uint64_t desk_limit_from_env() {
  const char* raw = std::getenv("CGX_DESK_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultDeskLimit;
  const std::string text(raw);
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      text.size() > 19) {
    throw UsageError("CGX_DESK_LIMIT must be a decimal integer, got \"" + text + "\"");
  }
  return std::stoull(text);
}

json report_to_json(const BijectionReport& r) {
  return json{
      {"d", r.d},
      {"max_order", r.max_order},
      {"count", r.count},
      {"expected", r.expected},
      {"min_value", r.min_value},
      {"max_value", r.max_value},
      {"duplicates", r.duplicates},
      {"missing", r.missing},
      {"out_of_range", r.out_of_range},
      {"encode_mismatches", r.encode_mismatches},
      {"lex_order_matches_values", r.lex_order_matches_values},
      {"ok", r.ok()},
  };
}

int cmd_encode(const Options& o, std::ostream& out) {
  const BigInt n = parse_number(o.number);
  const CoefficientSequence eps = encode(n, o.d);
  if (o.verify) {
    if (decode(eps, o.d) != n) throw InternalFailure("encode --verify: decode mismatch");
    if (const auto v = validate(eps, params(o.d))) {
      throw InternalFailure("encode --verify: result breaks the rule (" + to_string(*v) + ")");
    }
  }
  if (o.json) {
    out << json{{"d", o.d}, {"n", n.str()}, {"digits", to_string(eps)}}.dump() << '\n';
  } else {
    out << to_string(eps) << '\n';
  }
  return kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const CoefficientSequence eps = parse_sequence(o.digits);
  const Params p = params(o.d);
  if (o.strict) {
    if (const auto v = validate(eps, p)) throw DomainFailure("invalid digit string: " + to_string(*v));
  }
  const BigInt value = decode(eps, o.d);
  if (o.json) {
    json doc{{"d", o.d}, {"digits", to_string(eps)}, {"value", value.str()}};
    if (o.strict) doc["valid"] = true;
    out << doc.dump() << '\n';
  } else {
    out << value.str() << '\n';
  }
  return kOk;
}

int cmd_succ(const Options& o, std::ostream& out) {
  const CoefficientSequence start = parse_sequence(o.digits);
  Successors stream(start, o.count, params(o.d));
  json list = json::array();
  while (auto next = stream.next()) {
    if (o.json) {
      list.push_back(to_string(*next));
    } else {
      out << to_string(*next) << '\n';
    }
  }
  if (o.json) {
    out << json{{"d", o.d}, {"start", to_string(start)}, {"successors", list}}.dump() << '\n';
  }
  return kOk;
}

int cmd_blocks(const Options& o, std::ostream& out) {
  const CoefficientSequence eps = parse_sequence(o.digits);
  const std::vector<Block> blocks = decompose(eps, params(o.d));
  if (o.json) {
    json list = json::array();
    for (const Block& b : blocks) {
      list.push_back({{"kind", to_string(b.kind)},
                      {"digits", to_string(std::span<const Digit>(b.digits))}});
    }
    out << json{{"d", o.d}, {"digits", to_string(eps)}, {"blocks", list}}.dump() << '\n';
  } else {
    out << format_blocks(blocks, o.unicode ? "∨" : "v") << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_even_interval(o.d);
  const BijectionReport report = verify_bijection(o.max, o.d, desk_limit_from_env());
  out << report_to_json(report).dump(o.json ? -1 : 2) << '\n';
  return report.ok() ? kOk : kInternalFailure;
}

int cmd_alpha(const Options& o, std::ostream& out) {
  if (o.places == 0) throw UsageError("alpha needs at least one decimal place");
  const std::string value = alpha(o.places);
  if (o.json) {
    out << json{{"digits", o.places}, {"alpha", value}}.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kOk;
}

int cmd_seq(const Options& o, std::ostream& out) {
  const BaseSequence& h = BaseSequence::for_interval(o.d);
  json rows = json::array();
  if (!o.json) out << "k\tH_k\tK_k\tF_k\n";
  for (std::size_t k = 1; k <= o.max; ++k) {
    const std::string hk = h.term(k).str();
    const std::string kk = lucas_k(k).str();
    const std::string fk = fibonacci(k).str();
    if (o.json) {
      rows.push_back({{"k", k}, {"H", hk}, {"K", kk}, {"F", fk}});
    } else {
      out << k << '\t' << hk << '\t' << kk << '\t' << fk << '\n';
    }
  }
  if (o.json) out << json{{"d", o.d}, {"rows", rows}}.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{
      "cgx: Fibonacci-based numeration for even intervals d.\n"
      "Digit strings are little-endian: the first digit multiplies H_1 = 1."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  const auto add_interval = [&o](CLI::App* sub) {
    sub->add_option("--d", o.d, "Even interval d >= 2")->required();
  };

  auto* encode_cmd = app.add_subcommand("encode", "Expand a non-negative integer");
  add_interval(encode_cmd);
  encode_cmd->add_option("n", o.number, "Decimal integer of any size")->required();
  encode_cmd->add_flag("--verify", o.verify, "Decode the result again and check it");

  auto* decode_cmd = app.add_subcommand("decode", "Evaluate a digit string");
  add_interval(decode_cmd);
  decode_cmd->add_option("digits", o.digits, "Comma-separated digits, eps_1 first")->required();
  decode_cmd->add_flag("--strict", o.strict, "Reject strings that break the rule");

  auto* succ_cmd = app.add_subcommand("succ", "Lexicographic successors of a digit string");
  add_interval(succ_cmd);
  succ_cmd->add_option("digits", o.digits, "Comma-separated digits, eps_1 first")->required();
  succ_cmd->add_option("--count", o.count, "Number of successors")->capture_default_str();

  auto* blocks_cmd = app.add_subcommand("blocks", "Block decomposition of a digit string");
  add_interval(blocks_cmd);
  blocks_cmd->add_option("digits", o.digits, "Comma-separated digits, eps_1 first")->required();
  blocks_cmd->add_flag("--unicode", o.unicode, "Join blocks with U+2228 instead of 'v'");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive bijection check up to an order");
  add_interval(verify_cmd);
  verify_cmd->add_option("--max", o.max, "Largest order L to enumerate")->required();

  auto* alpha_cmd = app.add_subcommand("alpha", "The constant (1 + sum 1/F_2k)^-1");
  alpha_cmd->add_option("digits", o.places, "Decimal places")->capture_default_str();

  auto* seq_cmd = app.add_subcommand("seq", "Table of k, H_k, K_k, F_k");
  add_interval(seq_cmd);
  seq_cmd->add_option("--max", o.max, "Last k")->capture_default_str();

  const std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>>
      handlers = {
          {encode_cmd, cmd_encode}, {decode_cmd, cmd_decode}, {succ_cmd, cmd_succ},
          {blocks_cmd, cmd_blocks}, {verify_cmd, cmd_verify}, {alpha_cmd, cmd_alpha},
          {seq_cmd, cmd_seq},
      };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(o, out);
    }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnsupportedInterval& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DeskScaleExceeded& e) {
    err << "error: " << e.what() << " (raise CGX_DESK_LIMIT to override)\n";
    return kUsageError;
  } catch (const NotDecomposable& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const DomainFailure& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
}

}  // namespace cgx::cli
