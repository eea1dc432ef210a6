#pragma once

#include <string>
#include <string_view>

#include "k3/error.hpp"

namespace k3 {

enum class KodairaType { I, II, III, IV, Istar, IVstar, IIIstar, IIstar };

// I_n with n = 0 is a smooth fiber; Istar with n = 0 is I0*
struct KodairaSymbol {
  KodairaType type = KodairaType::I;
  unsigned n = 0;
  friend bool operator==(const KodairaSymbol&, const KodairaSymbol&) = default;
  friend auto operator<=>(const KodairaSymbol&, const KodairaSymbol&) = default;

  std::string name() const {
    switch (type) {
      case KodairaType::I: return "I" + std::to_string(n);
      case KodairaType::II: return "II";
      case KodairaType::III: return "III";
      case KodairaType::IV: return "IV";
      case KodairaType::Istar: return "I" + std::to_string(n) + "*";
      case KodairaType::IVstar: return "IV*";
      case KodairaType::IIIstar: return "III*";
      case KodairaType::IIstar: return "II*";
    }
    return "?";
  }

  static KodairaSymbol parse(std::string_view s) {
    if (s == "II") return {KodairaType::II, 0};
    if (s == "III") return {KodairaType::III, 0};
    if (s == "IV") return {KodairaType::IV, 0};
    if (s == "IV*") return {KodairaType::IVstar, 0};
    if (s == "III*") return {KodairaType::IIIstar, 0};
    if (s == "II*") return {KodairaType::IIstar, 0};
    if (s.size() >= 2 && s[0] == 'I') {
      bool star = s.back() == '*';
      std::string_view digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
      if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos)
        return {star ? KodairaType::Istar : KodairaType::I,
                static_cast<unsigned>(std::stoul(std::string(digits)))};
    }
    throw InvalidArgument("unknown Kodaira symbol " + std::string(s));
  }

  unsigned euler_number() const {
    switch (type) {
      case KodairaType::I: return n;
      case KodairaType::II: return 2;
      case KodairaType::III: return 3;
      case KodairaType::IV: return 4;
      case KodairaType::Istar: return n + 6;
      case KodairaType::IVstar: return 8;
      case KodairaType::IIIstar: return 9;
      case KodairaType::IIstar: return 10;
    }
    return 0;
  }

  unsigned component_count() const {
    switch (type) {
      case KodairaType::I: return n == 0 ? 1 : n;
      case KodairaType::II: return 1;
      case KodairaType::III: return 2;
      case KodairaType::IV: return 3;
      case KodairaType::Istar: return n + 5;
      case KodairaType::IVstar: return 7;
      case KodairaType::IIIstar: return 8;
      case KodairaType::IIstar: return 9;
    }
    return 0;
  }

  // discriminant of the root lattice spanned by non-identity components
  unsigned root_discriminant() const {
    switch (type) {
      case KodairaType::I: return n == 0 ? 1 : n;
      case KodairaType::II: return 1;
      case KodairaType::III: return 2;
      case KodairaType::IV: return 3;
      case KodairaType::Istar: return 4;
      case KodairaType::IVstar: return 3;
      case KodairaType::IIIstar: return 2;
      case KodairaType::IIstar: return 1;
    }
    return 1;
  }

  bool reducible() const { return component_count() > 1; }
};

}  // namespace k3
