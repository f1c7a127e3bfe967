// Command-line front end. Talks to the library only through revccs.h.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "revccs/revccs.h"

namespace {

constexpr int kRelated = 0;
constexpr int kNotRelated = 1;
constexpr int kError = 2;

struct Failure {
  int code;
};

struct TermDeleter {
  void operator()(revccs_term* t) const { revccs_term_free(t); }
};
using Term = std::unique_ptr<revccs_term, TermDeleter>;

struct StructureDeleter {
  void operator()(revccs_structure* s) const { revccs_structure_free(s); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  revccs_string_free(s);
  return out;
}

void check(revccs_status st, const std::string& what) {
  if (st == REVCCS_OK) return;
  std::cerr << "error: " << what << ": " << revccs_status_name(st) << ": " << revccs_last_error()
            << "\n";
  throw Failure{kError};
}

Term parse_term(const std::string& text) {
  revccs_term* t = nullptr;
  check(revccs_parse(text.c_str(), &t), "parse '" + text + "'");
  return Term(t);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{kError};
  }
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%') continue;
    out.push_back(line);
  }
  return out;
}

// --expr values first, then each positional: a readable file contributes
// its lines, anything else is taken as a term.
std::vector<std::string> gather(const std::vector<std::string>& exprs,
                                const std::vector<std::string>& inputs) {
  std::vector<std::string> out = exprs;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(in, ec)) {
      auto lines = read_lines(in);
      out.insert(out.end(), lines.begin(), lines.end());
    } else {
      out.push_back(in);
    }
  }
  return out;
}

revccs_format format_of(const std::string& f) {
  if (f == "dot") return REVCCS_FORMAT_DOT;
  if (f == "text") return REVCCS_FORMAT_TEXT;
  return REVCCS_FORMAT_JSON;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"revccs: reversible CCS, configuration structures and back-and-forth equivalences"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "json";
  std::size_t max_events = 10;
  std::size_t max_context = 8;
  bool no_par_collapse = false;
  std::string contexts_file;
  std::vector<std::string> exprs;

  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  app.add_option("--max-events", max_events, "Combined event bound for the brute-force oracle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-context", max_context, "Parallel components in a synthesized context")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--no-par-collapse", no_par_collapse,
               "Do not merge identical prefixed parallel components when collapsing");
  app.add_option("--contexts", contexts_file, "Extra context family, one context per line")
      ->check(CLI::ExistingFile);
  app.add_option("--expr", exprs, "Inline term (repeatable)");

  std::vector<std::string> inputs;
  auto* parse_cmd = app.add_subcommand("parse", "Parse terms and dump their syntax trees");
  parse_cmd->add_option("inputs", inputs, "Terms or files");

  auto* encode_cmd = app.add_subcommand("encode", "Configuration structure of each term");
  encode_cmd->add_option("inputs", inputs, "Terms or files");

  std::string script;
  auto* step_cmd = app.add_subcommand("step", "Replay a step script from the lifted term");
  step_cmd->add_option("inputs", inputs, "Term or file")->expected(0, 1);
  step_cmd->add_option("--script", script, "Commands: fwd a | fwd i:a | bwd i | bwd, separated by ';'");

  std::string kind;
  auto* check_cmd = app.add_subcommand("check", "Decide an equivalence between two terms");
  check_cmd->add_option("kind", kind, "hhpb | bfbarb | strong")
      ->required()
      ->check(CLI::IsMember({"hhpb", "bfbarb", "strong"}));
  check_cmd->add_option("inputs", inputs, "Terms or files");

  auto* disc_cmd = app.add_subcommand("discriminate", "Synthesize a discriminating context");
  disc_cmd->add_option("inputs", inputs, "Terms or files");

  auto* graph_cmd = app.add_subcommand("graph", "Reachable state graph in DOT");
  graph_cmd->add_option("inputs", inputs, "Term or file");

  std::string batch_kind = "hhpb";
  auto* batch_cmd = app.add_subcommand("batch", "Check every pair of terms of a corpus");
  batch_cmd->add_option("inputs", inputs, "Terms or files");
  batch_cmd->add_option("--kind", batch_kind, "hhpb | bfbarb | strong")
      ->check(CLI::IsMember({"hhpb", "bfbarb", "strong"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  revccs_options options;
  revccs_default_options(&options);
  options.par_collapse = no_par_collapse ? 0 : 1;
  options.max_events = max_events;
  options.max_context = max_context;
  auto kind_of = [](const std::string& k) {
    if (k == "bfbarb") return REVCCS_CHECK_BFBARB;
    if (k == "strong") return REVCCS_CHECK_STRONG;
    return REVCCS_CHECK_HHPB;
  };

  try {
    const std::vector<std::string> terms = gather(exprs, inputs);
    auto need = [&](std::size_t n) {
      if (terms.size() != n) {
        std::cerr << "error: expected " << n << " term(s), got " << terms.size() << "\n";
        throw Failure{kError};
      }
    };

    if (parse_cmd->parsed()) {
      if (terms.empty()) need(1);
      for (const auto& t : terms) {
        Term term = parse_term(t);
        char* out = nullptr;
        check(revccs_term_dump(term.get(), &out), "dump");
        std::cout << take(out);
      }
      return 0;
    }
    if (encode_cmd->parsed()) {
      if (terms.empty()) need(1);
      for (const auto& t : terms) {
        Term term = parse_term(t);
        revccs_structure* raw = nullptr;
        check(revccs_encode(term.get(), &options, &raw), "encode '" + t + "'");
        std::unique_ptr<revccs_structure, StructureDeleter> s(raw);
        char* out = nullptr;
        check(revccs_structure_export(s.get(), format_of(format), &out), "export");
        std::string text = take(out);
        std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
      }
      return 0;
    }
    if (step_cmd->parsed()) {
      need(1);
      Term term = parse_term(terms[0]);
      char* out = nullptr;
      check(revccs_step(term.get(), script.c_str(), &options,
                        format == "json" && !app.get_option("--format")->count() ? REVCCS_FORMAT_TEXT
                                                                                   : format_of(format),
                        &out),
            "step");
      std::cout << take(out);
      return 0;
    }
    if (graph_cmd->parsed()) {
      need(1);
      Term term = parse_term(terms[0]);
      char* out = nullptr;
      check(revccs_state_graph(term.get(), &out), "graph");
      std::cout << take(out);
      return 0;
    }
    if (check_cmd->parsed()) {
      need(2);
      Term p1 = parse_term(terms[0]);
      Term p2 = parse_term(terms[1]);
      int related = 0;
      char* verdict = nullptr;
      check(revccs_check(kind_of(kind), p1.get(), p2.get(), &options, &related, &verdict), "check");
      std::cout << take(verdict) << "\n";
      if (!contexts_file.empty()) {
        std::ifstream in(contexts_file);
        std::stringstream buf;
        buf << in.rdbuf();
        int consistent = 0;
        char* report = nullptr;
        check(revccs_congruence(p1.get(), p2.get(), buf.str().c_str(), &consistent, &report),
              "congruence");
        std::cout << take(report) << "\n";
      }
      return related ? kRelated : kNotRelated;
    }
    if (disc_cmd->parsed()) {
      need(2);
      Term p1 = parse_term(terms[0]);
      Term p2 = parse_term(terms[1]);
      char* context = nullptr;
      char* transcript = nullptr;
      check(revccs_discriminate(p1.get(), p2.get(), &options, &context, &transcript),
            "discriminate");
      std::cout << take(context) << "\n" << take(transcript);
      return 0;
    }
    if (batch_cmd->parsed()) {
      std::vector<Term> parsed;
      for (const auto& t : terms) parsed.push_back(parse_term(t));
      for (std::size_t i = 0; i < parsed.size(); ++i) {
        for (std::size_t j = i + 1; j < parsed.size(); ++j) {
          int related = 0;
          check(revccs_check(kind_of(batch_kind), parsed[i].get(), parsed[j].get(), &options,
                             &related, nullptr),
                "check");
          std::cout << "{\"p1\":\"" << terms[i] << "\",\"p2\":\"" << terms[j]
                    << "\",\"related\":" << (related ? "true" : "false") << "}\n";
        }
      }
      return 0;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kError;
}
