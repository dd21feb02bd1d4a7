#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trs/checker.hpp"
#include "trs/rewrite.hpp"

namespace trs {

/// Source names for the variables of each rule, in index order (the parser
/// assigns indices per rule, in first-occurrence order).
struct NameTable {
    std::vector<std::vector<std::string>> rule_var_names;

    std::string var_name(std::size_t rule, int index) const;
};

struct ParsedTrs {
    Trs system;
    NameTable names;
};

/// Parses the rule-set format:
///
///   file ::= "(VAR" name* ")" "(RULES" rule* ")"
///   rule ::= term "->" term
///   term ::= name | name "(" term ("," term)* ")"
///
/// Names are nonempty runs of letters, digits, '_' and '\''; a name is a
/// variable iff listed under VAR; '#' starts a line comment. Arities are
/// inferred from first use and must stay consistent.
ParsedTrs parse_trs(std::string_view text);

/// Parses a termination certificate against the given base signature
/// (marked symbols resolve through their sharp="true" attribute):
///
///   proof     ::= <dp>proof</dp>
///               | <decomp><graph>(<hde/>|<unif/>)</graph> component+ </decomp>
///               | <manna_ness><poly_int>mapping+</poly_int>proof</manna_ness>
///               | <trivial/>
///   component ::= <component><rules>rule*</rules> proof? </component>
///   rule      ::= <rule><lhs>xterm</lhs><rhs>xterm</rhs></rule>
///   xterm     ::= <var>NAT</var> | <app><fun sharp="true"?>NAME</fun> xterm*</app>
///   mapping   ::= <fun sharp="true"?>NAME</fun><polynomial>monomial*</polynomial>
///   monomial  ::= <monomial coef="INT"> (<exp var="NAT" pow="NAT"/>)* </monomial>
///
/// Monomial exponents address variables 1..arity(f).
Proof parse_certificate(std::string_view text, const Signature& base_sig);

/// Renders a system in the input format with canonical variable names;
/// re-parsing the output yields an identical system.
std::string print_trs(const Trs& system);

} // namespace trs
