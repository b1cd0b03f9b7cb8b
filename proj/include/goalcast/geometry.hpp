#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace goalcast {

// Local ENU kilometers centered on the airport reference point. This is the
// universal frame for the whole pipeline; z is height above field elevation.
struct LocalPosition {
  double x = 0.0;  // km east
  double y = 0.0;  // km north
  double z = 0.0;  // km above field elevation

  LocalPosition() = default;
  LocalPosition(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  LocalPosition operator+(const LocalPosition& o) const { return {x + o.x, y + o.y, z + o.z}; }
  LocalPosition operator-(const LocalPosition& o) const { return {x - o.x, y - o.y, z - o.z}; }
  bool operator==(const LocalPosition& o) const = default;
};

double norm(const LocalPosition& p);
double horizontal_range(const LocalPosition& p);
double distance(const LocalPosition& a, const LocalPosition& b);
double horizontal_distance(const LocalPosition& a, const LocalPosition& b);

struct Geodetic {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
  double elevation_m = 0.0;
};

enum class PatternDirection : uint8_t { left, right };

struct RunwayEnd {
  std::string designator;       // two-digit label, e.g. "08"
  double heading_deg = 0.0;     // degrees true, [0, 360)
  LocalPosition threshold;      // local ENU km
  PatternDirection pattern = PatternDirection::left;
};

struct AirportConfig {
  std::string name;
  Geodetic origin;
  std::vector<RunwayEnd> runway_ends;
  double pattern_altitude_agl_km = 0.305;

  // Throws std::invalid_argument when a structural invariant is broken:
  // no runway ends, designator/heading disagreement, unpaired headings,
  // or a non-positive pattern altitude.
  void validate() const;

  const RunwayEnd* find_end(const std::string& designator) const;
};

enum class CardinalDirection : uint8_t {
  north, northeast, east, southeast, south, southwest, west, northwest
};

std::string to_string(CardinalDirection d);

enum class PatternLeg : uint8_t { crosswind, base, downwind };

std::string to_string(PatternLeg leg);

// Discrete intent taxonomy. Unknown is reserved for the no-recent-call case
// and is never produced by the transcript parser.
struct IntentLabel {
  enum class Kind : uint8_t {
    takeoff, landing, enter_leg, depart, other, insufficient, unknown
  };

  Kind kind = Kind::unknown;
  std::string runway;                               // takeoff / landing / enter_leg
  PatternLeg leg = PatternLeg::crosswind;           // enter_leg only
  CardinalDirection direction = CardinalDirection::north;  // depart only

  static IntentLabel takeoff(std::string rw);
  static IntentLabel landing(std::string rw);
  static IntentLabel enter_leg(std::string rw, PatternLeg leg);
  static IntentLabel depart(CardinalDirection dir);
  static IntentLabel other();
  static IntentLabel insufficient();
  static IntentLabel unknown();

  bool operator==(const IntentLabel& o) const;
};

// Compact textual codec used in call files and reports, e.g. "landing:08",
// "enter_leg:08:downwind", "depart:N", "other", "insufficient", "unknown".
std::string to_string(const IntentLabel& label);
IntentLabel parse_intent_label(const std::string& text);

// Deterministic, duplicate-free enumeration of all labels for an airport:
// takeoffs, landings, then legs per runway end in designator order, then
// departures N,E,S,W, OtherIntent, InsufficientInformation, Unknown. The
// index of a label in this list is the embedding-dictionary key, so the
// ordering is part of the model checkpoint contract.
std::vector<IntentLabel> intent_label_set(const AirportConfig& airport);

// Index of `label` within intent_label_set(airport); throws
// std::invalid_argument if the label does not belong to this airport.
size_t intent_label_index(const AirportConfig& airport, const IntentLabel& label);

// Compass sector of a local position as seen from the field. `sectors` is 4
// or 8; sector centers sit on N/E/S/W (and intercardinals). A position on a
// sector boundary resolves to the clockwise-earlier sector. Throws
// std::invalid_argument at the origin (direction undefined at field).
CardinalDirection cardinal_direction(const LocalPosition& pos, int sectors);

// Horizontal range in whole nautical miles, half-up rounding.
int distance_miles(const LocalPosition& pos);

// Equirectangular local tangent projection around `origin`. Points farther
// than 500 km are rejected (std::invalid_argument); round-trips are within
// 1 m for points up to 50 km out.
LocalPosition geodetic_to_local(const Geodetic& point, const Geodetic& origin);
Geodetic local_to_geodetic(const LocalPosition& pos, const Geodetic& origin);

// Airport config file (key/value plus runway table, versioned schema=1).
AirportConfig load_airport(const std::string& path);
void save_airport(const AirportConfig& airport, const std::string& path);

}  // namespace goalcast
