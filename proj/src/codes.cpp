// Copyright 2026 The slddlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slddlab/codes.hpp"

#include "slddlab/errors.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "slddlab/gf2.hpp"

namespace sldd {

namespace {

std::string fmt_pair(const char *what, std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << what << " " << i + 1 << " and " << j + 1;
  return os.str();
}

} // namespace

std::vector<PauliOperator> CodeSpec::stabilizers_and_logicals() const {
  std::vector<PauliOperator> out(stabilizers.generators());
  for (const auto &p : logicals) {
    out.push_back(p.x);
    out.push_back(p.z);
  }
  return out;
}

std::vector<PauliOperator> CodeSpec::stabilizers_and_gauges() const {
  std::vector<PauliOperator> out(stabilizers.generators());
  for (const auto &p : gauges) {
    out.push_back(p.x);
    out.push_back(p.z);
  }
  return out;
}

std::vector<PauliOperator> CodeSpec::all_generators() const {
  std::vector<PauliOperator> out = stabilizers_and_logicals();
  for (const auto &p : gauges) {
    out.push_back(p.x);
    out.push_back(p.z);
  }
  return out;
}

std::vector<std::string> validate(const CodeSpec &code) {
  std::vector<std::string> report;
  const std::size_t n = code.n;

  if (code.n < code.k + code.r)
    report.push_back("n < k + r");
  if (code.stabilizers.n_qubits() != n)
    report.push_back("stabilizer set is not on n qubits");
  const std::size_t q_expected = n - code.k - code.r;
  if (code.stabilizers.size() != q_expected) {
    std::ostringstream os;
    os << "stabilizer count " << code.stabilizers.size() << " != n-(k+r) = "
       << q_expected;
    report.push_back(os.str());
  }
  if (code.logicals.size() != code.k)
    report.push_back("logical pair count != k");
  if (code.gauges.size() != code.r)
    report.push_back("gauge pair count != r");

  auto check_size = [&](const PauliOperator &p, const char *what) {
    if (p.n_qubits() != n)
      report.push_back(std::string(what) + " not on n qubits");
    if (!p.is_hermitian())
      report.push_back(std::string(what) + " is not a Hermitian representative");
  };
  for (const auto &pr : code.logicals) {
    check_size(pr.x, "logical X");
    check_size(pr.z, "logical Z");
  }
  for (const auto &pr : code.gauges) {
    check_size(pr.x, "gauge X");
    check_size(pr.z, "gauge Z");
  }
  if (!report.empty())
    return report; // structural failures make the rest ill-defined

  const auto &stabs = code.stabilizers.generators();
  for (std::size_t i = 0; i < stabs.size(); ++i)
    for (std::size_t j = i + 1; j < stabs.size(); ++j)
      if (!commutes(stabs[i], stabs[j]))
        report.push_back("anticommuting " + fmt_pair("stabilizers", i, j));

  auto stab_commutes_with = [&](const PauliOperator &p, const std::string &w) {
    for (std::size_t i = 0; i < stabs.size(); ++i)
      if (!commutes(stabs[i], p)) {
        std::ostringstream os;
        os << w << " anticommutes with stabilizer " << i + 1;
        report.push_back(os.str());
      }
  };
  for (std::size_t i = 0; i < code.logicals.size(); ++i) {
    stab_commutes_with(code.logicals[i].x, "logical X" + std::to_string(i + 1));
    stab_commutes_with(code.logicals[i].z, "logical Z" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < code.gauges.size(); ++i) {
    stab_commutes_with(code.gauges[i].x, "gauge X" + std::to_string(i + 1));
    stab_commutes_with(code.gauges[i].z, "gauge Z" + std::to_string(i + 1));
  }

  // Conjugate-pair pattern: X_i / Z_i anticommute within a pair, everything
  // else commutes, across both the logical and gauge families.
  std::vector<OperatorPair> pairs(code.logicals);
  pairs.insert(pairs.end(), code.gauges.begin(), code.gauges.end());
  const std::size_t kk = code.logicals.size();
  auto pair_name = [&](std::size_t i) {
    return i < kk ? "logical pair " + std::to_string(i + 1)
                  : "gauge pair " + std::to_string(i - kk + 1);
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (commutes(pairs[i].x, pairs[i].z))
      report.push_back(pair_name(i) + ": X and Z do not anticommute");
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j)
        continue;
      if (!commutes(pairs[i].x, pairs[j].x) ||
          !commutes(pairs[i].x, pairs[j].z))
        report.push_back(pair_name(i) + " X fails to commute with " +
                         pair_name(j));
    }
  }

  const auto all = code.all_generators();
  std::vector<BitVec> rows;
  rows.reserve(all.size());
  for (const auto &p : all)
    rows.push_back(p.symplectic_row());
  const std::size_t rank = gf2::rank(rows, 2 * n);
  if (rank != n + code.k + code.r) {
    std::ostringstream os;
    os << "generators span rank " << rank << " != n+k+r = "
       << n + code.k + code.r;
    report.push_back(os.str());
  }
  return report;
}

namespace {

CodeSpec finish(CodeSpec code) {
  const auto report = validate(code);
  if (!report.empty()) {
    std::string msg = "catalog code '" + code.name + "' failed validation:";
    for (const auto &r : report)
      msg += "\n  - " + r;
    throw std::logic_error(msg);
  }
  return code;
}

CodeSpec make_repetition(std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("repetition code needs odd n >= 3");
  CodeSpec c;
  c.n = n;
  c.k = 1;
  c.r = 0;
  c.d = 1;
  c.name = "repetition(" + std::to_string(n) + ")";
  std::vector<PauliOperator> stabs;
  for (std::size_t i = 1; i < n; ++i)
    stabs.push_back(
        multiply(PauliOperator::z_on(n, i), PauliOperator::z_on(n, i + 1)));
  c.stabilizers = GeneratorSet::from(n, stabs);
  PauliOperator lx(n);
  for (std::size_t i = 1; i <= n; ++i)
    lx = multiply(lx, PauliOperator::x_on(n, i));
  c.logicals.push_back({lx, PauliOperator::z_on(n, 1)});
  return finish(std::move(c));
}

CodeSpec make_five_qubit() {
  CodeSpec c;
  c.n = 5;
  c.k = 1;
  c.r = 0;
  c.d = 3;
  c.name = "five_qubit";
  const char *stab_strs[4] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  std::vector<PauliOperator> stabs;
  for (const char *s : stab_strs)
    stabs.push_back(PauliOperator::parse(s));
  c.stabilizers = GeneratorSet::from(5, stabs);
  c.logicals.push_back(
      {PauliOperator::parse("XXXXX"), PauliOperator::parse("ZZZZZ")});
  return finish(std::move(c));
}

CodeSpec make_steane() {
  CodeSpec c;
  c.n = 7;
  c.k = 1;
  c.r = 0;
  c.d = 3;
  c.name = "steane";
  // Hamming [7,4,3] parity checks: qubit j participates in row b when bit b
  // of j (1-based) is set.
  std::vector<PauliOperator> stabs;
  for (int b = 0; b < 3; ++b) {
    PauliOperator sx(7), sz(7);
    for (std::size_t j = 1; j <= 7; ++j)
      if ((j >> b) & 1) {
        sx = multiply(sx, PauliOperator::x_on(7, j));
        sz = multiply(sz, PauliOperator::z_on(7, j));
      }
    stabs.push_back(sx);
    stabs.push_back(sz);
  }
  c.stabilizers = GeneratorSet::from(7, stabs);
  c.logicals.push_back(
      {PauliOperator::parse("XXXXXXX"), PauliOperator::parse("ZZZZZZZ")});
  return finish(std::move(c));
}

CodeSpec make_four_two_two() {
  CodeSpec c;
  c.n = 4;
  c.k = 2;
  c.r = 0;
  c.d = 2;
  c.name = "four_two_two";
  c.stabilizers = GeneratorSet::from(
      4, {PauliOperator::parse("XXXX"), PauliOperator::parse("ZZZZ")});
  c.logicals.push_back(
      {PauliOperator::parse("XXII"), PauliOperator::parse("ZIZI")});
  c.logicals.push_back(
      {PauliOperator::parse("XIXI"), PauliOperator::parse("ZZII")});
  return finish(std::move(c));
}

/// Symplectic Gram-Schmidt: peel conjugate (anticommuting) pairs off the
/// pool, correcting the remainder to commute with each extracted pair. What
/// survives commutes with everything left and lands in `center`.
void symplectic_pairs(std::vector<PauliOperator> pool,
                      std::vector<OperatorPair> &pairs,
                      std::vector<PauliOperator> &center) {
  while (!pool.empty()) {
    PauliOperator g1 = pool.front();
    pool.erase(pool.begin());
    if (g1.is_identity())
      continue;
    std::size_t partner = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!commutes(g1, pool[i])) {
        partner = i;
        break;
      }
    if (partner == pool.size()) {
      center.push_back(g1);
      continue;
    }
    PauliOperator g2 = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    for (auto &e : pool) {
      if (!commutes(e, g2))
        e = multiply(e, g1).hermitian_representative();
      if (!commutes(e, g1))
        e = multiply(e, g2).hermitian_representative();
    }
    pairs.push_back({g1.hermitian_representative(),
                     g2.hermitian_representative()});
  }
}

CodeSpec make_bacon_shor(std::size_t m) {
  if (m < 2)
    throw std::invalid_argument("bacon_shor needs m >= 2");
  CodeSpec c;
  c.n = m * m;
  c.k = 1;
  c.r = (m - 1) * (m - 1);
  c.d = m;
  c.name = "bacon_shor(" + std::to_string(m) + ")";
  const std::size_t n = c.n;
  // Row-major grid, 1-based: qubit(i, j) = (i-1)m + j.
  auto qubit = [m](std::size_t i, std::size_t j) { return (i - 1) * m + j; };

  // Stabilizers: X on adjacent double columns, Z on adjacent double rows.
  std::vector<PauliOperator> stabs;
  for (std::size_t j = 1; j < m; ++j) {
    PauliOperator sx(n);
    for (std::size_t i = 1; i <= m; ++i) {
      sx = multiply(sx, PauliOperator::x_on(n, qubit(i, j)));
      sx = multiply(sx, PauliOperator::x_on(n, qubit(i, j + 1)));
    }
    stabs.push_back(sx);
  }
  for (std::size_t i = 1; i < m; ++i) {
    PauliOperator sz(n);
    for (std::size_t j = 1; j <= m; ++j) {
      sz = multiply(sz, PauliOperator::z_on(n, qubit(i, j)));
      sz = multiply(sz, PauliOperator::z_on(n, qubit(i + 1, j)));
    }
    stabs.push_back(sz);
  }
  c.stabilizers = GeneratorSet::from(n, stabs);

  // Logicals: X down the first column, Z along the first row.
  PauliOperator lx(n), lz(n);
  for (std::size_t i = 1; i <= m; ++i)
    lx = multiply(lx, PauliOperator::x_on(n, qubit(i, 1)));
  for (std::size_t j = 1; j <= m; ++j)
    lz = multiply(lz, PauliOperator::z_on(n, qubit(1, j)));
  c.logicals.push_back({lx, lz});

  // Raw gauge generators: XX along rows, ZZ along columns (the orientations
  // that commute with the stabilizer choice above). Symplectic Gram-Schmidt
  // prunes them to r conjugate pairs; the leftover center is the stabilizer
  // span and is discarded.
  std::vector<PauliOperator> pool;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j < m; ++j)
      pool.push_back(multiply(PauliOperator::x_on(n, qubit(i, j)),
                              PauliOperator::x_on(n, qubit(i, j + 1))));
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t i = 1; i < m; ++i)
      pool.push_back(multiply(PauliOperator::z_on(n, qubit(i, j)),
                              PauliOperator::z_on(n, qubit(i + 1, j))));
  std::vector<OperatorPair> pairs;
  std::vector<PauliOperator> center;
  symplectic_pairs(std::move(pool), pairs, center);
  if (pairs.size() != c.r)
    throw std::logic_error("bacon_shor gauge extraction produced " +
                           std::to_string(pairs.size()) + " pairs, expected " +
                           std::to_string(c.r));
  c.gauges = std::move(pairs);
  return finish(std::move(c));
}

} // namespace

CodeSpec catalog(const std::string &name, std::size_t parameter) {
  if (name == "repetition")
    return make_repetition(parameter == 0 ? 3 : parameter);
  if (name == "five_qubit")
    return make_five_qubit();
  if (name == "steane")
    return make_steane();
  if (name == "four_two_two")
    return make_four_two_two();
  if (name == "bacon_shor")
    return make_bacon_shor(parameter == 0 ? 3 : parameter);
  throw std::invalid_argument("unknown catalog code '" + name + "'");
}

std::vector<CodeSpec> catalog_all() {
  return {catalog("repetition", 3), catalog("five_qubit"), catalog("steane"),
          catalog("four_two_two"), catalog("bacon_shor", 2),
          catalog("bacon_shor", 3)};
}

GeneratorSet cat_state_stabilizers(std::size_t a) {
  if (a < 2)
    throw std::invalid_argument("cat state needs a >= 2 qubits");
  std::vector<PauliOperator> gens;
  PauliOperator all_x(a);
  for (std::size_t i = 1; i <= a; ++i)
    all_x = multiply(all_x, PauliOperator::x_on(a, i));
  gens.push_back(all_x);
  for (std::size_t i = 1; i < a; ++i)
    gens.push_back(
        multiply(PauliOperator::z_on(a, i), PauliOperator::z_on(a, i + 1)));
  return GeneratorSet::from(a, gens);
}

namespace {

constexpr std::size_t kMaxConcatQubits = 8192;

/// Substitute the logical representatives `rep` (on B qubits) for every
/// single-qubit letter of `p`: X -> rep.x, Z -> rep.z, Y -> i rep.x rep.z,
/// block j of the output standing for qubit j of the input.
PauliOperator lift(const PauliOperator &p, const OperatorPair &rep) {
  const std::size_t block = rep.x.n_qubits();
  const std::size_t n_out = p.n_qubits() * block;
  // p = i^w (tensor of letters) with w = phase_exp - #Y mod 4; the letter
  // substitution X -> X_L, Z -> Z_L, Y -> i X_L Z_L preserves the algebra
  // exactly, so the lifted operator is i^w times the product of factors.
  PauliOperator out(n_out);
  int y_count = 0;
  for (std::size_t q = 0; q < p.n_qubits(); ++q) {
    const bool xb = p.x_bits().get(q), zb = p.z_bits().get(q);
    if (!xb && !zb)
      continue;
    std::vector<std::size_t> map(block);
    for (std::size_t t = 0; t < block; ++t)
      map[t] = q * block + t;
    PauliOperator factor(block);
    if (xb && zb) {
      factor = times_phase(multiply(rep.x, rep.z), 1);
      ++y_count;
    } else if (xb) {
      factor = rep.x;
    } else {
      factor = rep.z;
    }
    out = multiply(out, factor.embed(n_out, map));
  }
  return times_phase(out, ((p.phase_exp() - y_count) % 4 + 4) % 4);
}

} // namespace

std::size_t ConcatenatedCode::total_stabilizer_count() const {
  std::size_t c = 0;
  for (const auto &s : per_level_stabilizers)
    c += s.size();
  return c;
}

ConcatenatedCode concatenate(const CodeSpec &code, std::size_t levels) {
  if (levels < 1)
    throw std::invalid_argument("concatenate: levels must be >= 1");
  const auto report = validate(code);
  if (!report.empty())
    throw std::invalid_argument("concatenate: base code invalid");
  if (levels == 1) {
    ConcatenatedCode cc;
    cc.base = code;
    cc.levels = 1;
    cc.n_total = code.n;
    cc.per_level_stabilizers.push_back(code.stabilizers);
    cc.top_logicals = code.logicals;
    return cc;
  }
  if (code.k != 1 || code.r != 0)
    throw std::invalid_argument(
        "structural concatenation beyond R=1 supports k=1, r=0 codes only; "
        "use count_parameters for general parameters");

  std::size_t n_total = 1;
  for (std::size_t q = 0; q < levels; ++q) {
    n_total *= code.n;
    if (n_total > kMaxConcatQubits)
      throw resource_error("concatenate: n^R exceeds qubit cap");
  }

  ConcatenatedCode cc;
  cc.base = code;
  cc.levels = levels;
  cc.n_total = n_total;

  // level_reps[q] = logical pair of a level-q block (on n^q qubits)
  std::vector<OperatorPair> level_reps(levels + 1);
  level_reps[1] = code.logicals[0];
  for (std::size_t q = 2; q <= levels; ++q)
    level_reps[q] = {lift(code.logicals[0].x, level_reps[q - 1]),
                     lift(code.logicals[0].z, level_reps[q - 1])};

  for (std::size_t q = 1; q <= levels; ++q) {
    std::size_t block = 1;
    for (std::size_t t = 0; t < q; ++t)
      block *= code.n;
    const std::size_t n_blocks = n_total / block;
    GeneratorSet level_set(n_total);
    for (std::size_t b = 0; b < n_blocks; ++b) {
      std::vector<std::size_t> map(block);
      for (std::size_t t = 0; t < block; ++t)
        map[t] = b * block + t;
      for (const auto &s : code.stabilizers.generators()) {
        const PauliOperator g =
            (q == 1) ? s : lift(s, level_reps[q - 1]);
        level_set.push_back_unchecked(
            g.embed(n_total, map).hermitian_representative());
      }
    }
    cc.per_level_stabilizers.push_back(std::move(level_set));
  }

  cc.top_logicals.push_back(
      {level_reps[levels].x.hermitian_representative(),
       level_reps[levels].z.hermitian_representative()});
  return cc;
}

ConcatCounts count_parameters(std::size_t n, std::size_t k, std::size_t r,
                              std::size_t levels) {
  if (k < 1 || k + r >= n || levels < 1)
    throw std::invalid_argument(
        "count_parameters requires n > k + r, k >= 1, R >= 1");
  using boost::multiprecision::pow;
  ConcatCounts c;
  const unsigned R = static_cast<unsigned>(levels);
  c.n_R = pow(BigInt(n), R);
  c.l_R = pow(BigInt(k), R);
  const BigInt kr_R = pow(BigInt(k + r), R);
  c.g_R = kr_R - c.l_R;
  c.q_R = c.n_R - kr_R;
  c.omega_size = c.q_R + 2 * c.l_R;
  return c;
}

std::string format_code_file(const CodeSpec &code) {
  std::ostringstream os;
  os << "[[" << code.n << "," << code.k << "," << code.r << "," << code.d
     << "]] " << code.name << "\n";
  os << "S:\n";
  for (const auto &s : code.stabilizers.generators())
    os << s.str() << "\n";
  if (!code.logicals.empty()) {
    os << "LX:\n";
    for (const auto &p : code.logicals)
      os << p.x.str() << "\n";
    os << "LZ:\n";
    for (const auto &p : code.logicals)
      os << p.z.str() << "\n";
  }
  if (!code.gauges.empty()) {
    os << "GX:\n";
    for (const auto &p : code.gauges)
      os << p.x.str() << "\n";
    os << "GZ:\n";
    for (const auto &p : code.gauges)
      os << p.z.str() << "\n";
  }
  return os.str();
}

CodeSpec parse_code_file(std::istream &in) {
  std::string line;
  // header: [[n,k,r,d]] name
  do {
    if (!std::getline(in, line))
      throw std::invalid_argument("code file: missing header line");
  } while (line.empty() || line[0] == '#');
  std::size_t n, k, r, d;
  char c1, c2, c3, c4, c5, c6, c7;
  std::istringstream hs(line);
  if (!(hs >> c1 >> c2 >> n >> c3 >> k >> c4 >> r >> c5 >> d >> c6 >> c7) ||
      c1 != '[' || c2 != '[' || c3 != ',' || c4 != ',' || c5 != ',' ||
      c6 != ']' || c7 != ']')
    throw std::invalid_argument("code file: malformed header '" + line + "'");
  std::string name;
  hs >> name;
  if (name.empty())
    name = "unnamed";

  std::vector<std::string> s_strs, lx, lz, gx, gz;
  std::vector<std::string> *section = nullptr;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#')
      continue;
    if (line == "S:") {
      section = &s_strs;
    } else if (line == "LX:") {
      section = &lx;
    } else if (line == "LZ:") {
      section = &lz;
    } else if (line == "GX:") {
      section = &gx;
    } else if (line == "GZ:") {
      section = &gz;
    } else {
      if (!section)
        throw std::invalid_argument("code file: Pauli line before any section");
      section->push_back(line);
    }
  }
  if (lx.size() != lz.size())
    throw std::invalid_argument("code file: LX/LZ counts differ");
  if (gx.size() != gz.size())
    throw std::invalid_argument("code file: GX/GZ counts differ");

  CodeSpec code;
  code.n = n;
  code.k = k;
  code.r = r;
  code.d = d;
  code.name = name;
  auto parse_at = [&](const std::string &s) {
    PauliOperator p = PauliOperator::parse(s);
    if (p.n_qubits() != n)
      throw std::invalid_argument("code file: '" + s + "' is not on " +
                                  std::to_string(n) + " qubits");
    return p.hermitian_representative();
  };
  std::vector<PauliOperator> stabs;
  for (const auto &s : s_strs)
    stabs.push_back(parse_at(s));
  try {
    code.stabilizers = GeneratorSet::from(n, stabs);
  } catch (const std::invalid_argument &e) {
    throw std::invalid_argument(std::string("code file: ") + e.what());
  }
  for (std::size_t i = 0; i < lx.size(); ++i)
    code.logicals.push_back({parse_at(lx[i]), parse_at(lz[i])});
  for (std::size_t i = 0; i < gx.size(); ++i)
    code.gauges.push_back({parse_at(gx[i]), parse_at(gz[i])});

  const auto report = validate(code);
  if (!report.empty()) {
    std::string msg = "code file rejected by validation:";
    for (const auto &r2 : report)
      msg += "\n  - " + r2;
    throw std::invalid_argument(msg);
  }
  return code;
}

CodeSpec parse_code_file(const std::string &text) {
  std::istringstream is(text);
  return parse_code_file(is);
}

} // namespace sldd
