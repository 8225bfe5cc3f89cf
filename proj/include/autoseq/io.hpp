#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "autoseq/automaton.hpp"
#include "autoseq/dfao.hpp"

namespace autoseq {

// Automaton text format (version 1), one directive per line, '#' comments:
//
//   automaton 1
//   base 2
//   order lsd            # or msd
//   tracks n i j         # may be empty for sentences
//   states 3
//   start 0
//   accept 0 2
//   0 -> 1 2 0 0 ...     # one line per state, successor for every letter
//
// DFAO text format (version 1):
//
//   dfao 1
//   base 2
//   states 2
//   start 0
//   0 0 -> 0 1           # id output -> successor per digit

std::string save_dfa(const Dfa& a);
Dfa load_dfa(std::string_view text);

std::string save_dfao(const Dfao& a);
Dfao load_dfao(std::string_view text);

/// States labelled by id, accepting states double-circled, edges labelled
/// with digit tuples.
std::string to_dot(const Dfa& a, const std::string& name = "automaton");
/// States labelled "id/output".
std::string to_dot(const Dfao& a, const std::string& name = "dfao");

enum class FileKind { Automaton, Dfao, Unknown };
FileKind sniff(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace autoseq
