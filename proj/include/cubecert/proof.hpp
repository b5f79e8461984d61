// Copyright 2026 The cubecert Authors
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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cubecert/numeric.hpp"
#include "cubecert/poly.hpp"
#include "cubecert/sturm.hpp"

namespace cubecert {

enum class Status { kVerified, kRefuted, kUndecided };
std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

struct SubClaim {
  std::string name;
  Status status = Status::kUndecided;
  // Self-contained: carries a "kind" tag and everything revalidate() needs.
  nlohmann::json evidence;
};

struct LemmaCertificate {
  std::string lemma_id;
  Status status = Status::kUndecided;
  std::vector<SubClaim> claims;
  std::vector<std::string> notes;

  void add(std::string name, Status status, nlohmann::json evidence);
  void add(std::string name, bool ok, nlohmann::json evidence) {
    add(std::move(name), ok ? Status::kVerified : Status::kRefuted, std::move(evidence));
  }
  // refuted if any claim is refuted, else undecided if any is undecided or
  // there are no claims, else verified.
  void finalize();

  nlohmann::json to_json() const;
  static LemmaCertificate from_json(const nlohmann::json& j);
};

// Re-checks every verified claim of the certificate from its evidence alone.
// Returns the names of claims that failed to re-validate.
std::vector<std::string> revalidate(const LemmaCertificate& cert);

// u + v*sqrt(d) with rational u, v, d (d >= 0). Arithmetic is in
// Q[t]/(t^2 - d); mapping t to sqrt(d) is a ring homomorphism into R, so an
// exact zero here is a zero of the real value. A plain rational carries
// d = 0 and adopts the radicand of the other operand.
struct QuadExt {
  Rational d;
  Rational u;
  Rational v;

  QuadExt(Rational u_ = Rational(0)) : u(std::move(u_)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational d_, Rational u_, Rational v_) : d(std::move(d_)), u(std::move(u_)), v(std::move(v_)) {}

  bool is_zero() const { return u.is_zero() && v.is_zero(); }
  Expr to_expr() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
  // Accepts {"d": .., "u": .., "v": ..} with rational strings.
  static QuadExt from_json(const nlohmann::json& j);

  // Throws DomainError when both operands carry different radicands.
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  // Throws DivisionByZero when b has zero norm.
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b);
  QuadExt operator-() const { return QuadExt(d, -u, -v); }
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.u == b.u && a.v == b.v && (a.v.is_zero() || a.d == b.d);
  }
};

QuadExt evaluate_in_extension(const MultiPoly& p, const std::map<std::string, QuadExt>& point);

// The coefficients of the once-squared form of the reduced inequality,
// C_A*A + C_B*B + C_AB*A*B + L = 0, and the radicands of A and B.
struct EliminationSystem {
  MultiPoly c_a, c_b, c_ab, l;
  MultiPoly a_sq, b_sq;

  static EliminationSystem printed();
  RadicalPoly::RelationsPtr relations() const;
};

// constant * prod(factor_i ^ exponent_i)
struct DiscriminantFactors {
  Rational constant;
  std::vector<std::pair<MultiPoly, unsigned>> factors;

  static DiscriminantFactors printed();
  MultiPoly expand() const;
};

// Printed polynomials of the proof, keyed by role.
namespace printed {
MultiPoly t1();
MultiPoly t2();
MultiPoly t3();
MultiPoly t4();
// T4 written as a quartic in Y = y^2 (the Sturm lemma's g).
MultiPoly g_quartic();
// r(y) from the T3 argument and its b -> -b companion.
MultiPoly r_parabola();
MultiPoly r_companion();
MultiPoly p_x3_product();
MultiPoly p_at_b0();
MultiPoly p_at_y0();
// Sign-determining polynomials in b from the Sturm lemma.
MultiPoly g4_at0_sign();        // 12b^10 - 91b^8 + ...
MultiPoly g3_at0_numerator();   // degree 22
MultiPoly g3_lead_numerator();  // degree 24
MultiPoly g2_lead_sign();       // -(5/8)b^8 - ...
}  // namespace printed

// (C_A^2 A^2 + C_B^2 B^2 - L^2 - C_AB^2 A^2 B^2)^2 - 4 A^2 B^2 (C_AB L - C_A C_B)^2
// collected as a cubic in x. Throws DomainError if the degree in x is not 3.
CubicInX build_P(const EliminationSystem& sys = EliminationSystem::printed());

// Golden transcriptions: name -> canonical polynomial text.
struct GoldenSet {
  std::map<std::string, std::string> files;

  static GoldenSet embedded();
  // Reads every *.poly file of a directory. Throws IoError.
  static GoldenSet from_directory(const std::string& dir);
};

LemmaCertificate verify_P_print(const GoldenSet& golden = GoldenSet::embedded());
LemmaCertificate verify_P_special_cases();
LemmaCertificate verify_elimination_from_main();
LemmaCertificate verify_discriminant_factorization();
LemmaCertificate verify_T3();
LemmaCertificate verify_T4_positive(const std::vector<Rational>& b_samples);
LemmaCertificate verify_T1_negative();
LemmaCertificate verify_T2_case(const std::vector<Rational>& b_samples = {});
// Double-root point of P on the T2 locus: x = b sqrt(b^2-2),
// y = (b^2+1) sqrt(b^2-2) / (b^2-1). The numerators of both sides of the
// reduced inequality are exact elements of Q(sqrt(b^2-2)) there.
struct T2SpecialPoint {
  Rational b;
  QuadExt x, y;
  QuadExt lhs_numerator, rhs_numerator;
};
// Throws DomainError unless b > sqrt(2).
T2SpecialPoint t2_special_point(const Rational& b);

LemmaCertificate verify_asymptotics(const Rational& b, const Rational& y);

// k/100 for k = 0..1000 plus landmarks near sqrt(2), 0.22, 0.23, 2*sqrt(2).
std::vector<Rational> default_b_samples(std::size_t count = 1001);

// Left and right sides of the reduced inequality at (x, y, b) in double
// precision, written without catastrophic cancellation. f = lhs - rhs.
struct ReducedMainSides {
  double lhs;
  double rhs;
  double difference;
};
ReducedMainSides reduced_main_sides(double x, double y, double b);

}  // namespace cubecert
