// Copyright 2026 The QLT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlt/qasm.hpp"

#include <cstdio>
#include <regex>
#include <sstream>

namespace qlt {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string operands(const Gate& g) {
  std::string s;
  for (int c : g.controls) s += "q[" + std::to_string(c) + "], ";
  return s + "q[" + std::to_string(g.target) + "]";
}

std::string controls_only(const Gate& g) {
  std::string s;
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    if (i) s += ", ";
    s += "q[" + std::to_string(g.controls[i]) + "]";
  }
  return s;
}

std::string modifier(const Gate& g) {
  if (g.controls.empty()) return "";
  return "ctrl(" + std::to_string(g.controls.size()) + ") @ ";
}

std::string gate_line(const Gate& g) {
  const std::string args = operands(g);
  switch (g.op) {
    case GateOp::X:
      if (g.controls.size() == 1) return "cx " + args + ";";
      if (g.controls.size() == 2) return "ccx " + args + ";";
      return modifier(g) + "x " + args + ";";
    case GateOp::H:
      return modifier(g) + "h " + args + ";";
    case GateOp::Phase:
      return modifier(g) + "p(" + num(g.theta) + ") " + args + ";";
    case GateOp::RY:
      return modifier(g) + "ry(" + num(g.theta) + ") " + args + ";";
    case GateOp::RZ:
      return modifier(g) + "rz(" + num(g.theta) + ") " + args + ";";
    case GateOp::U2: {
      const EulerAngles e = euler_angles(g.matrix);
      std::string line = modifier(g) + "U(" + num(e.theta) + ", " +
                         num(e.phi) + ", " + num(e.lambda) + ") " + args + ";";
      if (g.controls.empty()) {
        line += " gphase(" + num(e.gamma) + ");";
      } else {
        line += " " + modifier(g) + "gphase(" + num(e.gamma) + ") " +
                controls_only(g) + ";";
      }
      return line;
    }
  }
  return "";
}

std::vector<int> parse_qubits(const std::string& s) {
  static const std::regex qubit(R"(q\[(\d+)\])");
  std::vector<int> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), qubit);
       it != std::sregex_iterator(); ++it) {
    out.push_back(std::stoi((*it)[1].str()));
  }
  return out;
}

std::vector<double> parse_args(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

}  // namespace

EulerAngles euler_angles(const Eigen::Matrix2cd& m) {
  constexpr double tiny = 1e-14;
  EulerAngles e;
  const double a = std::abs(m(0, 0)), b = std::abs(m(1, 0));
  e.theta = 2.0 * std::atan2(b, a);
  if (b < tiny) {
    e.gamma = std::arg(m(0, 0));
    e.lambda = std::arg(m(1, 1)) - e.gamma;
  } else if (a < tiny) {
    e.gamma = std::arg(m(1, 0));
    e.lambda = std::arg(-m(0, 1)) - e.gamma;
  } else {
    e.gamma = std::arg(m(0, 0));
    e.phi = std::arg(m(1, 0)) - e.gamma;
    e.lambda = std::arg(-m(0, 1)) - e.gamma;
  }
  return e;
}

Eigen::Matrix2cd u_matrix(const EulerAngles& e) {
  using namespace std::complex_literals;
  const double c = std::cos(e.theta / 2), s = std::sin(e.theta / 2);
  Eigen::Matrix2cd u;
  u << c, -std::exp(1i * e.lambda) * s, std::exp(1i * e.phi) * s,
      std::exp(1i * (e.phi + e.lambda)) * c;
  return std::exp(1i * e.gamma) * u;
}

std::string to_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  for (const auto& r : c.layout().registers()) {
    out << "// register " << r.name << ' ' << r.offset << ' ' << r.size << '\n';
  }
  out << "qubit[" << c.num_qubits() << "] q;\n";
  int open = -1;
  for (const Gate& g : c.gates()) {
    if (g.oracle != open) {
      if (open >= 0) out << "// oracle end\n";
      if (g.oracle >= 0) out << "// oracle begin\n";
      open = g.oracle;
    }
    out << gate_line(g) << '\n';
  }
  if (open >= 0) out << "// oracle end\n";
  return out.str();
}

Circuit parse_qasm(const std::string& text) {
  static const std::regex reg_re(R"(^// register (\S+) (\d+) (\d+)$)");
  static const std::regex width_re(R"(^qubit\[(\d+)\] q;$)");
  static const std::regex gate_re(
      R"(^(?:ctrl\((\d+)\) @ )?(h|x|cx|ccx|p|ry|rz|U)(?:\(([^)]*)\))? ([^;]*);(.*)$)");
  static const std::regex gphase_re(R"(gphase\(([^)]*)\))");

  RegisterLayout layout;
  Circuit circ;
  bool have_width = false;
  int oracle = -1, next_oracle = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::smatch m;
    if (line.empty() || line.rfind("OPENQASM", 0) == 0 ||
        line.rfind("include", 0) == 0) {
      continue;
    }
    if (std::regex_match(line, m, reg_re)) {
      layout.add(m[1].str(), std::stoi(m[3].str()));
      continue;
    }
    if (line == "// oracle begin") {
      oracle = next_oracle++;
      continue;
    }
    if (line == "// oracle end") {
      oracle = -1;
      continue;
    }
    if (line.rfind("//", 0) == 0) continue;
    if (std::regex_match(line, m, width_re)) {
      const int width = std::stoi(m[1].str());
      if (layout.total() != width) {
        layout = RegisterLayout();
        layout.add("q", width);
      }
      circ = Circuit(layout);
      have_width = true;
      continue;
    }
    if (!have_width || !std::regex_match(line, m, gate_re)) {
      throw std::invalid_argument("parse_qasm: cannot parse line " +
                                  std::to_string(lineno) + ": " + line);
    }
    const std::string name = m[2].str();
    const std::vector<int> qs = parse_qubits(m[4].str());
    const std::vector<double> args =
        m[3].matched ? parse_args(m[3].str()) : std::vector<double>{};
    if (qs.empty()) throw std::invalid_argument("parse_qasm: missing qubits");

    Gate g;
    g.target = qs.back();
    g.controls.assign(qs.begin(), qs.end() - 1);
    if (name == "h") {
      g.op = GateOp::H;
    } else if (name == "x" || name == "cx" || name == "ccx") {
      g.op = GateOp::X;
    } else if (name == "p" || name == "ry" || name == "rz") {
      g.op = name == "p" ? GateOp::Phase : name == "ry" ? GateOp::RY : GateOp::RZ;
      if (args.size() != 1) throw std::invalid_argument("parse_qasm: angle");
      g.theta = args[0];
    } else {
      if (args.size() != 3) throw std::invalid_argument("parse_qasm: U args");
      EulerAngles e{args[0], args[1], args[2], 0.0};
      const std::string rest = m[5].str();
      std::smatch gm;
      if (std::regex_search(rest, gm, gphase_re)) e.gamma = std::stod(gm[1].str());
      g.op = GateOp::U2;
      g.matrix = u_matrix(e);
    }
    g.oracle = oracle;
    circ.add(std::move(g));
  }
  return circ;
}

}  // namespace qlt
