#include "oortlab/group_spec.hpp"

#include <charconv>
#include <vector>

#include "oortlab/errors.hpp"

namespace oortlab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_colon(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ':') {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::uint32_t parse_uint(const std::string& s, std::string_view context) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected a number, got '" + s + "' in '" + std::string(context) + "'");
  }
  return v;
}

// Accepts "16" or "2^4".
std::uint32_t parse_power(const std::string& s, std::string_view context) {
  auto caret = s.find('^');
  if (caret == std::string::npos) return parse_uint(s, context);
  std::uint32_t base = parse_uint(s.substr(0, caret), context);
  std::uint32_t exp = parse_uint(s.substr(caret + 1), context);
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > UINT32_MAX) throw ParseError("power too large in '" + std::string(context) + "'");
  }
  return static_cast<std::uint32_t>(v);
}

void expect_arity(const std::vector<std::string>& parts, std::size_t n, std::string_view text) {
  if (parts.size() != n) {
    throw ParseError("wrong number of fields in group spec '" + std::string(text) + "'");
  }
}

// Index of the ')' matching the '(' at `open`.
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
}

}  // namespace

GroupSpec parse_group_spec(std::string_view raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty group spec");

  if (text.rfind("PROD:", 0) == 0) {
    std::string_view rest = std::string_view(text).substr(5);
    if (rest.empty() || rest.front() != '(') throw ParseError("PROD expects '(spec)x(spec)'");
    std::size_t close1 = matching_paren(rest, 0);
    if (close1 + 2 >= rest.size() || rest[close1 + 1] != 'x' || rest[close1 + 2] != '(') {
      throw ParseError("PROD expects '(spec)x(spec)' in '" + text + "'");
    }
    std::size_t open2 = close1 + 2;
    std::size_t close2 = matching_paren(rest, open2);
    if (close2 != rest.size() - 1) throw ParseError("trailing text after PROD in '" + text + "'");
    auto left = std::make_shared<const GroupSpec>(parse_group_spec(rest.substr(1, close1 - 1)));
    auto right = std::make_shared<const GroupSpec>(
        parse_group_spec(rest.substr(open2 + 1, close2 - open2 - 1)));
    return GroupSpec{GroupSpec::Product{std::move(left), std::move(right)}};
  }

  auto parts = split_colon(text);
  const std::string& tag = parts[0];
  if (tag == "C") {
    expect_arity(parts, 2, text);
    return GroupSpec{GroupSpec::Cyclic{parse_uint(parts[1], text)}};
  }
  if (tag == "D") {
    expect_arity(parts, 2, text);
    return GroupSpec{GroupSpec::Dihedral{parse_uint(parts[1], text)}};
  }
  if (tag == "Q") {
    expect_arity(parts, 2, text);
    return GroupSpec{GroupSpec::Quaternion{parse_power(parts[1], text)}};
  }
  if (tag == "SD") {
    expect_arity(parts, 2, text);
    return GroupSpec{GroupSpec::Semidihedral{parse_power(parts[1], text)}};
  }
  if (tag == "A") {
    expect_arity(parts, 2, text);
    return GroupSpec{GroupSpec::Alternating{parse_uint(parts[1], text)}};
  }
  if (tag == "S") {
    expect_arity(parts, 2, text);
    return GroupSpec{GroupSpec::Symmetric{parse_uint(parts[1], text)}};
  }
  if (tag == "PSL2") {
    expect_arity(parts, 2, text);
    return GroupSpec{GroupSpec::Psl2{parse_uint(parts[1], text)}};
  }
  if (tag == "PGL2") {
    expect_arity(parts, 2, text);
    return GroupSpec{GroupSpec::Pgl2{parse_uint(parts[1], text)}};
  }
  if (tag == "PSL3_4") {
    expect_arity(parts, 1, text);
    return GroupSpec{GroupSpec::Psl34{}};
  }
  if (tag == "INV") {
    expect_arity(parts, 4, text);
    InversionKernel k;
    if (parts[3] == "cyclic") {
      k = InversionKernel::Cyclic;
    } else if (parts[3] == "klein") {
      k = InversionKernel::Klein;
    } else {
      throw ParseError("INV kernel must be 'cyclic' or 'klein' in '" + text + "'");
    }
    return GroupSpec{GroupSpec::Inversion{parse_uint(parts[1], text), parse_power(parts[2], text), k}};
  }
  if (tag == "DELPERM") {
    if (parts.size() != 3 && parts.size() != 4) expect_arity(parts, 3, text);
    TopGroup top;
    if (parts[2] == "A4") {
      top = TopGroup::A4;
    } else if (parts[2] == "S4") {
      top = TopGroup::S4;
    } else {
      throw ParseError("DELPERM top group must be A4 or S4 in '" + text + "'");
    }
    bool sign = false;
    if (parts.size() == 4) {
      if (parts[3] != "sign") throw ParseError("DELPERM option must be 'sign' in '" + text + "'");
      sign = true;
    }
    return GroupSpec{GroupSpec::DeletedPerm{parse_uint(parts[1], text), top, sign}};
  }
  throw ParseError("unknown group spec '" + text + "'");
}

std::string to_string(const GroupSpec& spec) {
  struct Visitor {
    std::string operator()(const GroupSpec::Cyclic& c) const { return "C:" + std::to_string(c.m); }
    std::string operator()(const GroupSpec::Dihedral& d) const {
      return "D:" + std::to_string(d.two_n);
    }
    std::string operator()(const GroupSpec::Quaternion& q) const {
      return "Q:" + std::to_string(q.two_k);
    }
    std::string operator()(const GroupSpec::Semidihedral& s) const {
      return "SD:" + std::to_string(s.two_k);
    }
    std::string operator()(const GroupSpec::Alternating& a) const {
      return "A:" + std::to_string(a.n);
    }
    std::string operator()(const GroupSpec::Symmetric& s) const {
      return "S:" + std::to_string(s.n);
    }
    std::string operator()(const GroupSpec::Psl2& p) const {
      return "PSL2:" + std::to_string(p.q);
    }
    std::string operator()(const GroupSpec::Pgl2& p) const {
      return "PGL2:" + std::to_string(p.q);
    }
    std::string operator()(const GroupSpec::Psl34&) const { return "PSL3_4"; }
    std::string operator()(const GroupSpec::Inversion& v) const {
      return "INV:" + std::to_string(v.m) + ":" + std::to_string(v.two_k) + ":" +
             (v.kernel == InversionKernel::Cyclic ? "cyclic" : "klein");
    }
    std::string operator()(const GroupSpec::DeletedPerm& d) const {
      return "DELPERM:" + std::to_string(d.r) + ":" + (d.top == TopGroup::A4 ? "A4" : "S4") +
             (d.sign_twist ? ":sign" : "");
    }
    std::string operator()(const GroupSpec::Product& p) const {
      return "PROD:(" + to_string(*p.left) + ")x(" + to_string(*p.right) + ")";
    }
  };
  return std::visit(Visitor{}, spec.kind);
}

Group build(const GroupSpec& spec) {
  struct Visitor {
    Group operator()(const GroupSpec::Cyclic& c) const { return cyclic(c.m); }
    Group operator()(const GroupSpec::Dihedral& d) const { return dihedral(d.two_n); }
    Group operator()(const GroupSpec::Quaternion& q) const { return quaternion(q.two_k); }
    Group operator()(const GroupSpec::Semidihedral& s) const { return semidihedral(s.two_k); }
    Group operator()(const GroupSpec::Alternating& a) const { return alternating(a.n); }
    Group operator()(const GroupSpec::Symmetric& s) const { return symmetric(s.n); }
    Group operator()(const GroupSpec::Psl2& p) const { return psl2(p.q); }
    Group operator()(const GroupSpec::Pgl2& p) const { return pgl2(p.q); }
    Group operator()(const GroupSpec::Psl34&) const { return psl3_4(); }
    Group operator()(const GroupSpec::Inversion& v) const {
      return abelian_by_dihedral_inversion(v.m, v.two_k, v.kernel);
    }
    Group operator()(const GroupSpec::DeletedPerm& d) const {
      return deleted_perm_semidirect(d.r, d.top, d.sign_twist);
    }
    Group operator()(const GroupSpec::Product& p) const {
      return direct_product(build(*p.left), build(*p.right));
    }
  };
  return std::visit(Visitor{}, spec.kind);
}

}  // namespace oortlab
