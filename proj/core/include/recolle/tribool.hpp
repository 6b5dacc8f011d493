#pragma once

#include <string>

namespace recolle {

// Tri-valued verdict with a human-readable certificate.
struct TriBool {
  enum class Value { True, False, Unknown };
  Value value = Value::Unknown;
  std::string evidence;

  static TriBool yes(std::string why) { return {Value::True, std::move(why)}; }
  static TriBool no(std::string why) { return {Value::False, std::move(why)}; }
  static TriBool unknown(std::string why) { return {Value::Unknown, std::move(why)}; }

  bool is_true() const { return value == Value::True; }
  bool is_false() const { return value == Value::False; }
  bool is_unknown() const { return value == Value::Unknown; }
  const char* name() const {
    return value == Value::True ? "True" : (value == Value::False ? "False" : "Unknown");
  }
};

// Kleene conjunction; evidence of the deciding conjunct is kept.
inline TriBool tri_and(const TriBool& a, const TriBool& b) {
  if (a.is_false()) return a;
  if (b.is_false()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return TriBool::yes(a.evidence + "; " + b.evidence);
}

}  // namespace recolle
