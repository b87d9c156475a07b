#pragma once

#include <iosfwd>
#include <string>

#include "uttp/reduction.hpp"

namespace uttp {

// Text formats. All writers emit a canonical form (single spaces, one
// trailing newline per line) so that write(read(text)) == text and
// read(write(value)) == value.

/// First line: size. Then size lines of half-unit integers.
void write_matrix(std::ostream& out, const CostMatrix& matrix);
CostMatrix read_matrix(std::istream& in);

void write_12_instance(std::ostream& out, const TspInstance& inst);
TspInstance read_12_instance(std::istream& in);

/// Vertex count, the visiting order on one line, then the half-unit cost.
void write_tour(std::ostream& out, const Tour& tour);
Tour read_tour(std::istream& in);

/// Walk length, the sequence on one line, then the half-unit cost.
void write_walk(std::ostream& out, const ClosedWalk& walk);
ClosedWalk read_walk(std::istream& in);

/// Base matrix block, central vertex, copy count, completed matrix block.
/// Reading rebuilds the completion and cross-checks the stored block.
void write_wheel(std::ostream& out, const WheelInstance& wheel);
WheelInstance read_wheel(std::istream& in);

/// teams / hub_weight_half / L / U and the team->venue placement line.
/// Reading requires the matching wheel and cross-checks the placement.
void write_ttp_descriptor(std::ostream& out, const TtpInstance& inst);
TtpInstance read_ttp_descriptor(std::istream& in, WheelInstance wheel);

/// First line: team count and day count. One line per day of
/// "home:away" pairs.
void write_schedule(std::ostream& out, const Schedule& s);
Schedule read_schedule(std::istream& in);

/// Group counts, the tour the schedule was built from, and the slot table.
void write_layout(std::ostream& out, const GroupLayout& layout, const Tour& wheel_tour);

/// "key value" lines in the given order.
using ReportRows = std::vector<std::pair<std::string, std::string>>;
void write_report(std::ostream& out, const ReportRows& rows);

std::string flag_text(bool pass);  // "pass" / "fail"

// Convenience file wrappers; throw std::runtime_error on I/O failure.
void save_text_file(const std::string& path, const std::string& text);
std::string load_text_file(const std::string& path);

}  // namespace uttp
