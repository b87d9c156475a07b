#include "uttp/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace uttp {

namespace {

std::invalid_argument parse_error(const std::string& what) {
  return std::invalid_argument("parse error: " + what);
}

template <typename T>
T read_value(std::istream& in, const char* what) {
  T v;
  if (!(in >> v)) throw parse_error(std::string("expected ") + what);
  return v;
}

void write_ints(std::ostream& out, const std::vector<int>& values) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << values[i];
  }
  out << '\n';
}

}  // namespace

void write_matrix(std::ostream& out, const CostMatrix& matrix) {
  out << matrix.size << '\n';
  for (int i = 0; i < matrix.size; ++i) {
    for (int j = 0; j < matrix.size; ++j) {
      if (j) out << ' ';
      out << matrix.at(i, j);
    }
    out << '\n';
  }
}

CostMatrix read_matrix(std::istream& in) {
  const int size = read_value<int>(in, "matrix size");
  if (size <= 0) throw parse_error("matrix size must be positive");
  CostMatrix m = CostMatrix::zeros(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      m.entries[static_cast<size_t>(i) * size + j] = read_value<Half>(in, "matrix entry");
  m.require_well_formed();
  return m;
}

void write_12_instance(std::ostream& out, const TspInstance& inst) {
  write_matrix(out, inst.matrix);
}

TspInstance read_12_instance(std::istream& in) { return as_12_instance(read_matrix(in)); }

void write_tour(std::ostream& out, const Tour& tour) {
  out << tour.order.size() << '\n';
  write_ints(out, tour.order);
  out << tour.cost << '\n';
}

Tour read_tour(std::istream& in) {
  const int size = read_value<int>(in, "tour size");
  if (size <= 0) throw parse_error("tour size must be positive");
  Tour t;
  t.order.resize(size);
  for (int& v : t.order) v = read_value<int>(in, "tour vertex");
  t.cost = read_value<Half>(in, "tour cost");
  return t;
}

void write_walk(std::ostream& out, const ClosedWalk& walk) {
  out << walk.sequence.size() << '\n';
  write_ints(out, walk.sequence);
  out << walk.cost << '\n';
}

ClosedWalk read_walk(std::istream& in) {
  const int size = read_value<int>(in, "walk length");
  if (size <= 0) throw parse_error("walk length must be positive");
  ClosedWalk w;
  w.sequence.resize(size);
  for (int& v : w.sequence) v = read_value<int>(in, "walk vertex");
  w.cost = read_value<Half>(in, "walk cost");
  if (w.sequence.front() != w.sequence.back())
    throw parse_error("closed walk must end where it starts");
  return w;
}

void write_wheel(std::ostream& out, const WheelInstance& wheel) {
  write_matrix(out, wheel.base.matrix);
  out << wheel.central << '\n' << wheel.c << '\n';
  write_matrix(out, wheel.matrix);
}

WheelInstance read_wheel(std::istream& in) {
  TspInstance base = as_12_instance(read_matrix(in));
  const int central = read_value<int>(in, "central vertex");
  const int c = read_value<int>(in, "copy count");
  WheelInstance wheel = build_wheel(base, central, c);
  const CostMatrix stored = read_matrix(in);
  if (stored.size != wheel.matrix.size || stored.entries != wheel.matrix.entries)
    throw parse_error("stored completed matrix does not match its base");
  return wheel;
}

void write_ttp_descriptor(std::ostream& out, const TtpInstance& inst) {
  out << "teams " << inst.team_count << '\n';
  out << "hub_weight_half " << inst.hub_weight << '\n';
  out << "window_lo " << inst.window_lo << '\n';
  out << "window_hi " << inst.window_hi << '\n';
  out << "placement";
  for (int v : inst.venue) out << ' ' << v;
  out << '\n';
}

TtpInstance read_ttp_descriptor(std::istream& in, WheelInstance wheel) {
  std::string key;
  auto expect_key = [&](const char* want) {
    if (!(in >> key) || key != want) throw parse_error(std::string("expected key ") + want);
  };
  expect_key("teams");
  const int teams = read_value<int>(in, "team count");
  expect_key("hub_weight_half");
  const Half hub = read_value<Half>(in, "hub weight");
  expect_key("window_lo");
  const int lo = read_value<int>(in, "window low");
  expect_key("window_hi");
  const int hi = read_value<int>(in, "window high");
  expect_key("placement");
  std::vector<int> placement(teams);
  for (int& v : placement) v = read_value<int>(in, "venue");

  TtpInstance inst = build_ttp_instance(std::move(wheel), hub, teams);
  if (lo != inst.window_lo || hi != inst.window_hi)
    throw parse_error("window parameters do not match the unconstrained defaults");
  if (placement != inst.venue) throw parse_error("placement does not follow the fixed layout");
  return inst;
}

void write_schedule(std::ostream& out, const Schedule& s) {
  out << s.team_count << ' ' << s.days.size() << '\n';
  for (const auto& day : s.days) {
    for (size_t i = 0; i < day.size(); ++i) {
      if (i) out << ' ';
      out << day[i].home << ':' << day[i].away;
    }
    out << '\n';
  }
}

Schedule read_schedule(std::istream& in) {
  Schedule s;
  s.team_count = read_value<int>(in, "team count");
  const std::int64_t days = read_value<std::int64_t>(in, "day count");
  if (s.team_count <= 0 || s.team_count % 2 != 0) throw parse_error("team count must be even");
  if (days < 0) throw parse_error("day count must be nonnegative");
  s.days.resize(static_cast<size_t>(days));
  for (auto& day : s.days) {
    day.resize(s.team_count / 2);
    for (Game& g : day) {
      std::string pair = read_value<std::string>(in, "home:away pair");
      const size_t colon = pair.find(':');
      if (colon == std::string::npos) throw parse_error("game must be written home:away");
      try {
        g.home = std::stoi(pair.substr(0, colon));
        g.away = std::stoi(pair.substr(colon + 1));
      } catch (const std::exception&) {
        throw parse_error("game must be written home:away");
      }
    }
  }
  return s;
}

void write_layout(std::ostream& out, const GroupLayout& layout, const Tour& wheel_tour) {
  out << "groups " << layout.group_count << '\n';
  out << "group_size " << layout.group_size << '\n';
  out << "tour";
  for (int v : wheel_tour.order) out << ' ' << v;
  out << '\n';
  out << "tour_cost_half " << wheel_tour.cost << '\n';
  out << "team_by_slot";
  for (int t : layout.team_by_slot) out << ' ' << t;
  out << '\n';
}

void write_report(std::ostream& out, const ReportRows& rows) {
  for (const auto& [key, value] : rows) out << key << ' ' << value << '\n';
}

std::string flag_text(bool pass) { return pass ? "pass" : "fail"; }

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string load_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace uttp
