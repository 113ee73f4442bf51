#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "satkit/disc.hpp"
#include "satkit/rational.hpp"
#include "satkit/rouche.hpp"
#include "satkit/small_map.hpp"

namespace satkit {

// All reports are ordered JSON so field order is stable across runs; exact
// rationals are serialized as "p/q" strings, never floats.
using OrderedJson = nlohmann::ordered_json;

std::string json_rat(const Rat& x);
std::string json_gauss(const GaussRat& z);
OrderedJson json_point(const std::vector<GaussRat>& w);

const char* verdict_name(SatVerdict v);
const char* method_name(SatMethod m);
const char* disc_method_name(DiscMethod m);

OrderedJson json_disc(const GoodDisc& d, bool include_r_star = false);
OrderedJson json_bounds(const SatelliteCertificate& c);
OrderedJson json_witness(const SatelliteCertificate& c);
OrderedJson json_small_map(const SmallMapReport& r);

}  // namespace satkit
