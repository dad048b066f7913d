#pragma once

// JSON forms of the library types. Rationals are always "n/d" strings;
// integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise. Every to_json has a matching parser so reports round-trip.

#include <string>

#include <json.hpp>

#include "solenoid/box.hpp"
#include "solenoid/direction.hpp"
#include "solenoid/partition.hpp"
#include "solenoid/point.hpp"

namespace solenoid {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Integer& v);
void from_json(const Json& j, Integer& v);
void to_json(Json& j, const Rational& v);
void from_json(const Json& j, Rational& v);

void to_json(Json& j, const SolenoidPoint& p);
void to_json(Json& j, const Reduction& r);
void from_json(const Json& j, Reduction& r);
void to_json(Json& j, const WilsonTrace& t);
void from_json(const Json& j, WilsonTrace& t);
void to_json(Json& j, const WilsonDigits& d);
void from_json(const Json& j, WilsonDigits& d);

void to_json(Json& j, const PadicClass& c);
void to_json(Json& j, const Box& b);
void to_json(Json& j, const BoxSet& s);
void from_json(const Json& j, BoxSet& s);

void to_json(Json& j, const Partition& p);
void from_json(const Json& j, Partition& p);
void to_json(Json& j, const RefinementReport& r);
void from_json(const Json& j, RefinementReport& r);
void to_json(Json& j, const MarkovReport& r);
void from_json(const Json& j, MarkovReport& r);
void to_json(Json& j, const TransitionMatrix& m);
void from_json(const Json& j, TransitionMatrix& m);
void to_json(Json& j, const GeneratorProfile& g);
void from_json(const Json& j, GeneratorProfile& g);

void to_json(Json& j, const Entropy& e);
void from_json(const Json& j, Entropy& e);
void to_json(Json& j, const DirectionClass& c);
void from_json(const Json& j, DirectionClass& c);
void to_json(Json& j, const ClosedFormZeta& z);
void from_json(const Json& j, ClosedFormZeta& z);
void to_json(Json& j, const ZetaSeries& z);
void from_json(const Json& j, ZetaSeries& z);

Stability parse_stability(const std::string& text);
Cone parse_cone(const std::string& text);
Place parse_place(const std::string& text);

/// Rows of 0/1 separated by commas, one line per row.
std::string to_csv(const TransitionMatrix& m);

}  // namespace solenoid

namespace nlohmann {

template <>
struct adl_serializer<solenoid::SolenoidPoint> {
  static solenoid::SolenoidPoint from_json(const solenoid::Json& j);
  static void to_json(solenoid::Json& j, const solenoid::SolenoidPoint& p) { solenoid::to_json(j, p); }
};

template <>
struct adl_serializer<solenoid::PadicClass> {
  /// Needs the prime, so only the Box parser reads classes.
  static void to_json(solenoid::Json& j, const solenoid::PadicClass& c) { solenoid::to_json(j, c); }
};

template <>
struct adl_serializer<solenoid::Box> {
  static solenoid::Box from_json(const solenoid::Json& j);
  static void to_json(solenoid::Json& j, const solenoid::Box& b) { solenoid::to_json(j, b); }
};

}  // namespace nlohmann
