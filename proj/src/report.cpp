#include <cinttypes>
#include <cstdio>
#include <string>

#include "formulas.hpp"

namespace zetalab {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string side_json(const SideBreakdown& s) {
    std::string out = "{";
    out += "\"h\":" + num(s.components.at("h"));
    out += ",\"zero_sum\":" + num(s.components.at("zero_sum"));
    out += ",\"trivial_sum\":" + num(s.components.at("trivial_sum"));
    out += ",\"total\":" + num(s.value);
    out += "}";
    return out;
}

} // namespace

std::string VerificationReport::to_json() const {
    std::string j = "{";
    j += "\"identity\":\"" + std::string(identity_name(params.identity)) + "\"";
    j += ",\"params\":{";
    j += "\"x\":" + num(params.x);
    j += ",\"r\":" + std::to_string(params.r);
    j += ",\"weight\":\"" + std::string(weight_name(params.weight)) + "\"";
    j += ",\"n_terms\":" + std::to_string(params.n_terms);
    j += ",\"n_zeros\":" + std::to_string(params.n_zeros);
    j += ",\"n_trivial\":" + std::to_string(params.n_trivial);
    j += "}";
    j += ",\"lhs\":{\"value\":" + num(lhs.value) + ",\"tail_bound\":" + num(lhs.tail_estimate) + "}";
    if (rhs_paper) j += ",\"rhs_paper\":" + side_json(*rhs_paper);
    if (rhs_oracle) j += ",\"rhs_oracle\":" + side_json(*rhs_oracle);
    if (rhs_paper) j += ",\"residual_paper\":" + num(residual_paper);
    if (rhs_oracle) j += ",\"residual_oracle\":" + num(residual_oracle);
    j += ",\"pass_bound\":" + num(pass_bound);
    j += ",\"pass\":" + std::string(pass ? "true" : "false");
    j += ",\"runtime_ms\":" + std::to_string(runtime_ms);
    j += "}";
    return j;
}

} // namespace zetalab
