#include "goalcast/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "goalcast/error.hpp"

namespace goalcast {

namespace {

constexpr double kEarthRadiusKm = 6371.0088;
constexpr double kKmPerNauticalMile = 1.852;
constexpr double kDegToRad = std::numbers::pi / 180.0;

double wrap360(double deg) {
  double d = std::fmod(deg, 360.0);
  if (d < 0.0) d += 360.0;
  return d;
}

}  // namespace

double norm(const LocalPosition& p) { return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z); }

double horizontal_range(const LocalPosition& p) { return std::hypot(p.x, p.y); }

double distance(const LocalPosition& a, const LocalPosition& b) { return norm(a - b); }

double horizontal_distance(const LocalPosition& a, const LocalPosition& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void AirportConfig::validate() const {
  if (runway_ends.empty()) throw std::invalid_argument("airport has no runway ends");
  if (pattern_altitude_agl_km <= 0.0)
    throw std::invalid_argument("pattern altitude must be positive");
  for (const auto& end : runway_ends) {
    if (end.designator.size() != 2 || !std::isdigit(end.designator[0]) ||
        !std::isdigit(end.designator[1]))
      throw std::invalid_argument("runway designator must be two digits: " + end.designator);
    int num = std::stoi(end.designator);
    int expect = static_cast<int>(std::llround(end.heading_deg / 10.0)) % 36;
    if (expect == 0) expect = 36;
    int diff = std::abs(num - expect);
    diff = std::min(diff, 36 - diff);
    if (diff > 1)
      throw std::invalid_argument("designator " + end.designator + " does not match heading " +
                                  std::to_string(end.heading_deg));
  }
  // Physical runways come in reciprocal pairs: every end needs a partner
  // whose heading differs by 180 +- 1 degrees, unless the airport lists a
  // single end only (one-way strip).
  if (runway_ends.size() > 1) {
    for (const auto& end : runway_ends) {
      bool paired = false;
      for (const auto& other : runway_ends) {
        if (&other == &end) continue;
        double d = std::abs(wrap360(other.heading_deg - end.heading_deg) - 180.0);
        if (d <= 1.0) paired = true;
      }
      if (!paired)
        throw std::invalid_argument("runway end " + end.designator + " has no reciprocal end");
    }
  }
}

const RunwayEnd* AirportConfig::find_end(const std::string& designator) const {
  for (const auto& end : runway_ends)
    if (end.designator == designator) return &end;
  return nullptr;
}

std::string to_string(CardinalDirection d) {
  switch (d) {
    case CardinalDirection::north: return "North";
    case CardinalDirection::northeast: return "Northeast";
    case CardinalDirection::east: return "East";
    case CardinalDirection::southeast: return "Southeast";
    case CardinalDirection::south: return "South";
    case CardinalDirection::southwest: return "Southwest";
    case CardinalDirection::west: return "West";
    case CardinalDirection::northwest: return "Northwest";
  }
  return "North";
}

std::string to_string(PatternLeg leg) {
  switch (leg) {
    case PatternLeg::crosswind: return "crosswind";
    case PatternLeg::base: return "base";
    case PatternLeg::downwind: return "downwind";
  }
  return "crosswind";
}

IntentLabel IntentLabel::takeoff(std::string rw) {
  IntentLabel l;
  l.kind = Kind::takeoff;
  l.runway = std::move(rw);
  return l;
}
IntentLabel IntentLabel::landing(std::string rw) {
  IntentLabel l;
  l.kind = Kind::landing;
  l.runway = std::move(rw);
  return l;
}
IntentLabel IntentLabel::enter_leg(std::string rw, PatternLeg leg) {
  IntentLabel l;
  l.kind = Kind::enter_leg;
  l.runway = std::move(rw);
  l.leg = leg;
  return l;
}
IntentLabel IntentLabel::depart(CardinalDirection dir) {
  IntentLabel l;
  l.kind = Kind::depart;
  l.direction = dir;
  return l;
}
IntentLabel IntentLabel::other() {
  IntentLabel l;
  l.kind = Kind::other;
  return l;
}
IntentLabel IntentLabel::insufficient() {
  IntentLabel l;
  l.kind = Kind::insufficient;
  return l;
}
IntentLabel IntentLabel::unknown() {
  IntentLabel l;
  l.kind = Kind::unknown;
  return l;
}

bool IntentLabel::operator==(const IntentLabel& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::takeoff:
    case Kind::landing: return runway == o.runway;
    case Kind::enter_leg: return runway == o.runway && leg == o.leg;
    case Kind::depart: return direction == o.direction;
    default: return true;
  }
}

std::string to_string(const IntentLabel& label) {
  using Kind = IntentLabel::Kind;
  switch (label.kind) {
    case Kind::takeoff: return "takeoff:" + label.runway;
    case Kind::landing: return "landing:" + label.runway;
    case Kind::enter_leg: return "enter_leg:" + label.runway + ":" + to_string(label.leg);
    case Kind::depart: {
      switch (label.direction) {
        case CardinalDirection::north: return "depart:N";
        case CardinalDirection::east: return "depart:E";
        case CardinalDirection::south: return "depart:S";
        case CardinalDirection::west: return "depart:W";
        default: break;
      }
      return "depart:N";
    }
    case Kind::other: return "other";
    case Kind::insufficient: return "insufficient";
    case Kind::unknown: return "unknown";
  }
  return "unknown";
}

IntentLabel parse_intent_label(const std::string& text) {
  if (text == "other") return IntentLabel::other();
  if (text == "insufficient") return IntentLabel::insufficient();
  if (text == "unknown") return IntentLabel::unknown();
  auto first = text.find(':');
  if (first == std::string::npos) throw ParseError("unrecognized intent label: " + text);
  std::string head = text.substr(0, first);
  std::string rest = text.substr(first + 1);
  if (head == "takeoff") return IntentLabel::takeoff(rest);
  if (head == "landing") return IntentLabel::landing(rest);
  if (head == "depart") {
    if (rest == "N") return IntentLabel::depart(CardinalDirection::north);
    if (rest == "E") return IntentLabel::depart(CardinalDirection::east);
    if (rest == "S") return IntentLabel::depart(CardinalDirection::south);
    if (rest == "W") return IntentLabel::depart(CardinalDirection::west);
    throw ParseError("bad departure direction: " + text);
  }
  if (head == "enter_leg") {
    auto second = rest.find(':');
    if (second == std::string::npos) throw ParseError("enter_leg needs runway and leg: " + text);
    std::string rw = rest.substr(0, second);
    std::string leg = rest.substr(second + 1);
    if (leg == "crosswind") return IntentLabel::enter_leg(rw, PatternLeg::crosswind);
    if (leg == "base") return IntentLabel::enter_leg(rw, PatternLeg::base);
    if (leg == "downwind") return IntentLabel::enter_leg(rw, PatternLeg::downwind);
    throw ParseError("bad pattern leg: " + text);
  }
  throw ParseError("unrecognized intent label: " + text);
}

std::vector<IntentLabel> intent_label_set(const AirportConfig& airport) {
  airport.validate();
  std::vector<const RunwayEnd*> ends;
  ends.reserve(airport.runway_ends.size());
  for (const auto& end : airport.runway_ends) ends.push_back(&end);
  std::sort(ends.begin(), ends.end(),
            [](const RunwayEnd* a, const RunwayEnd* b) { return a->designator < b->designator; });

  std::vector<IntentLabel> labels;
  labels.reserve(ends.size() * 5 + 7);
  for (const auto* end : ends) labels.push_back(IntentLabel::takeoff(end->designator));
  for (const auto* end : ends) labels.push_back(IntentLabel::landing(end->designator));
  for (const auto* end : ends)
    for (PatternLeg leg : {PatternLeg::crosswind, PatternLeg::base, PatternLeg::downwind})
      labels.push_back(IntentLabel::enter_leg(end->designator, leg));
  for (CardinalDirection dir : {CardinalDirection::north, CardinalDirection::east,
                                CardinalDirection::south, CardinalDirection::west})
    labels.push_back(IntentLabel::depart(dir));
  labels.push_back(IntentLabel::other());
  labels.push_back(IntentLabel::insufficient());
  labels.push_back(IntentLabel::unknown());
  return labels;
}

size_t intent_label_index(const AirportConfig& airport, const IntentLabel& label) {
  const auto set = intent_label_set(airport);
  for (size_t i = 0; i < set.size(); ++i)
    if (set[i] == label) return i;
  throw std::invalid_argument("label not in this airport's intent set: " + to_string(label));
}

CardinalDirection cardinal_direction(const LocalPosition& pos, int sectors) {
  if (sectors != 4 && sectors != 8) throw std::invalid_argument("sectors must be 4 or 8");
  if (horizontal_range(pos) <= 0.0) throw std::invalid_argument("direction undefined at field");
  // Compass bearing: 0 = north, clockwise positive.
  double bearing = std::atan2(pos.x, pos.y) / kDegToRad;
  bearing = wrap360(bearing);
  const double width = 360.0 / sectors;
  // Boundary angles resolve to the clockwise-earlier sector, so the sector
  // around center c covers (c - width/2, c + width/2].
  int idx = static_cast<int>(std::ceil((bearing - width / 2.0) / width));
  idx = ((idx % sectors) + sectors) % sectors;
  if (sectors == 4) {
    static constexpr CardinalDirection kQuad[4] = {
        CardinalDirection::north, CardinalDirection::east, CardinalDirection::south,
        CardinalDirection::west};
    return kQuad[idx];
  }
  static constexpr CardinalDirection kOct[8] = {
      CardinalDirection::north, CardinalDirection::northeast, CardinalDirection::east,
      CardinalDirection::southeast, CardinalDirection::south, CardinalDirection::southwest,
      CardinalDirection::west, CardinalDirection::northwest};
  return kOct[idx];
}

int distance_miles(const LocalPosition& pos) {
  return static_cast<int>(std::floor(horizontal_range(pos) / kKmPerNauticalMile + 0.5));
}

LocalPosition geodetic_to_local(const Geodetic& point, const Geodetic& origin) {
  if (std::abs(point.lat_deg) > 90.0 || std::abs(origin.lat_deg) > 90.0)
    throw std::invalid_argument("latitude out of range");
  double dlat = (point.lat_deg - origin.lat_deg) * kDegToRad;
  double dlon = point.lon_deg - origin.lon_deg;
  // Cross the antimeridian the short way round.
  if (dlon > 180.0) dlon -= 360.0;
  if (dlon < -180.0) dlon += 360.0;
  dlon *= kDegToRad;
  double x = kEarthRadiusKm * dlon * std::cos(origin.lat_deg * kDegToRad);
  double y = kEarthRadiusKm * dlat;
  if (std::hypot(x, y) > 500.0)
    throw std::invalid_argument("point too far from origin for local projection");
  double z = (point.elevation_m - origin.elevation_m) / 1000.0;
  return {x, y, z};
}

Geodetic local_to_geodetic(const LocalPosition& pos, const Geodetic& origin) {
  Geodetic g;
  g.lat_deg = origin.lat_deg + pos.y / kEarthRadiusKm / kDegToRad;
  g.lon_deg =
      origin.lon_deg + pos.x / (kEarthRadiusKm * std::cos(origin.lat_deg * kDegToRad)) / kDegToRad;
  g.elevation_m = origin.elevation_m + pos.z * 1000.0;
  return g;
}

AirportConfig load_airport(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open airport config: " + path);
  AirportConfig airport;
  std::string line;
  long lineno = 0;
  bool have_schema = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    if (line.rfind("runway", 0) == 0) {
      if (!have_schema) throw SchemaError("airport config missing schema=1 header");
      std::string tag;
      RunwayEnd end;
      std::string pattern;
      ss >> tag >> end.designator >> end.heading_deg >> end.threshold.x >> end.threshold.y >>
          end.threshold.z >> pattern;
      if (ss.fail()) throw ParseError("bad runway line", lineno);
      if (pattern == "right")
        end.pattern = PatternDirection::right;
      else if (pattern == "left" || pattern.empty())
        end.pattern = PatternDirection::left;
      else
        throw ParseError("pattern direction must be left or right", lineno);
      airport.runway_ends.push_back(end);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", lineno);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    try {
      if (key == "schema") {
        if (value != "1") throw SchemaError("unsupported airport schema: " + value);
        have_schema = true;
      } else if (key == "name") {
        airport.name = value;
      } else if (key == "origin_lat") {
        airport.origin.lat_deg = std::stod(value);
      } else if (key == "origin_lon") {
        airport.origin.lon_deg = std::stod(value);
      } else if (key == "origin_elev_m") {
        airport.origin.elevation_m = std::stod(value);
      } else if (key == "pattern_altitude_km") {
        airport.pattern_altitude_agl_km = std::stod(value);
      } else {
        throw ParseError("unknown airport config key: " + key, lineno);
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad value for " + key, lineno);
    }
  }
  if (!have_schema) throw SchemaError("airport config missing schema=1 header");
  airport.validate();
  return airport;
}

void save_airport(const AirportConfig& airport, const std::string& path) {
  airport.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write airport config: " + path);
  out << "schema=1\n";
  out << "name=" << airport.name << "\n";
  out << "origin_lat=" << airport.origin.lat_deg << "\n";
  out << "origin_lon=" << airport.origin.lon_deg << "\n";
  out << "origin_elev_m=" << airport.origin.elevation_m << "\n";
  out << "pattern_altitude_km=" << airport.pattern_altitude_agl_km << "\n";
  for (const auto& end : airport.runway_ends) {
    out << "runway " << end.designator << " " << end.heading_deg << " " << end.threshold.x << " "
        << end.threshold.y << " " << end.threshold.z << " "
        << (end.pattern == PatternDirection::left ? "left" : "right") << "\n";
  }
}

}  // namespace goalcast
