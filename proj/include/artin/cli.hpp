#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "artin/chain.hpp"
#include "artin/character.hpp"
#include "artin/error.hpp"
#include "artin/graph.hpp"

namespace artin::cli {

using Json = nlohmann::ordered_json;

enum class Command { Classify, Liv, Sigma1, Sigma2, Homology, Fibring, Scan };

Command parse_command(std::string_view name);
std::string_view to_string(Command c);

struct JobSpec {
  LabeledGraph graph;
  std::vector<Character> characters;
  std::optional<FiniteQuotient> quotient;
  std::vector<FieldSpec> fields;  // empty: default menu
  Command command = Command::Classify;
  long bound = 3;
  long max_bound = 3;
  bool assume_kpi1 = false;
  std::vector<std::string> notes;
};

// Canonical document: {"vertices": [...], "edges": [[u, v, label], ...],
// "character": {id: value} or "characters": [{...}, ...], optional
// "quotient": {"orders": [...], "phi": {id: [...]}}, "fields": [...],
// "command": name, "bound": B}. Labels "inf" are dropped with a note.
// Throws ParseError (with line and column) or SchemaError.
JobSpec parse_input(std::string_view document);

// Inline edge list "a-b:3,b-c:4"; a bare name adds an isolated vertex.
LabeledGraph parse_inline_graph(std::string_view text, std::vector<std::string>* notes = nullptr);

// Inline character "a=1,b=-1/2"; unnamed vertices get 0.
Character parse_inline_character(const LabeledGraph& g, std::string_view text);

// Checks the bound and the per-command requirements.
void validate_job(const JobSpec& spec);

Json run_command(const JobSpec& spec);

std::string render_text(const Json& report);

// 0 success, 2 parse or schema error, 3 failed precondition, 4 invariant breach.
int exit_code(ErrorCode code);

}  // namespace artin::cli
