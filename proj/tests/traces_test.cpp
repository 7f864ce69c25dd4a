#include "mlpl/traces.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "mlpl/csv.hpp"
#include "mlpl/error.hpp"

namespace mlpl {
namespace {

namespace fs = std::filesystem;

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / ("mlpl_traces_" + name);
  csv::write_text(path, text);
  return path;
}

const std::string kRawHead =
    "t_s,tx_power_dbm,snr_db,tx_x,tx_y,tx_z,rx_x,rx_y,rx_z,tx_gain_dbi,rx_gain_dbi,freq_mhz,"
    "bw_mhz\n";

TraceRecord warehouse_record(double snr) {
  TraceRecord r;
  r.tx_power = 7.0;
  r.snr = snr;
  r.tx_pos = Position(0, 0, 0);
  r.rx_pos = Position(3, 4, 0);
  r.tx_gain = -7.0;
  r.rx_gain = -7.0;
  r.freq = 5220.0;
  r.bandwidth = 20.0;
  return r;
}

TEST(ParseSimple, MapsFields) {
  const auto path = write_temp("simple.csv", "distance_m,path_loss_db\n10.0,66.8\n2.5,50\n");
  const auto samples = parse_simple(path);
  ASSERT_EQ(samples.size(), 2u);
  EXPECT_EQ(samples[0].distance, 10.0);
  EXPECT_EQ(samples[0].path_loss, 66.8);
  EXPECT_EQ(samples[1].distance, 2.5);
}

TEST(ParseSimple, HeaderOnlyIsEmpty) {
  const auto path = write_temp("empty.csv", "# comment\ndistance_m,path_loss_db\n");
  EXPECT_TRUE(parse_simple(path).empty());
}

TEST(ParseSimple, ZeroDistanceIsValidationError) {
  const auto path = write_temp("zero.csv", "distance_m,path_loss_db\n0.0,50\n");
  EXPECT_THROW(parse_simple(path), ValidationError);
}

TEST(ParseSimple, MalformedRowNamesLine) {
  const auto path = write_temp("bad.csv", "distance_m,path_loss_db\n1,2\n3,abc\n");
  try {
    parse_simple(path);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
}

TEST(ParseRaw, CarriesWarehouseValues) {
  const auto path = write_temp("raw.csv", kRawHead + "0,7,30,0,0,0,3,4,0,-7,-7,5220,20\n");
  const auto recs = parse_raw(path);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].tx_power, 7.0);
  EXPECT_EQ(recs[0].tx_gain, -7.0);
  EXPECT_EQ(recs[0].rx_gain, -7.0);
  EXPECT_EQ(recs[0].freq, 5220.0);
  EXPECT_EQ(recs[0].bandwidth, 20.0);
  EXPECT_EQ(recs[0].rx_pos, Position(3, 4, 0));
}

TEST(ParseRaw, NegativeBandwidthRejected) {
  const auto path = write_temp("negbw.csv", kRawHead + "0,7,30,0,0,0,3,4,0,-7,-7,5220,-20\n");
  EXPECT_THROW(parse_raw(path), ValidationError);
}

TEST(ParseRaw, NonMonotoneTimeNamesRow) {
  const auto path = write_temp("time.csv", kRawHead + "1,7,30,0,0,0,3,4,0,-7,-7,5220,20\n" +
                                                "0,7,30,0,0,0,3,4,0,-7,-7,5220,20\n");
  try {
    parse_raw(path);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
}

TEST(ParseRaw, MissingColumnIsNamed) {
  const auto path = write_temp("missing.csv", "t_s,tx_power_dbm\n0,7\n");
  try {
    parse_raw(path);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("snr_db"), std::string::npos) << e.what();
  }
}

TEST(Distance, Examples) {
  EXPECT_DOUBLE_EQ(distance(Position(0, 0, 0), Position(3, 4, 0)), 5.0);
  EXPECT_EQ(distance(Position(1, 2, 3), Position(1, 2, 3)), 0.0);
  EXPECT_NEAR(distance(Position(1, 1, 1), Position(2, 2, 2)), 1.7320508, 1e-7);
}

TEST(Distance, SymmetricAndTriangle) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const Position a(u(gen), u(gen), u(gen)), b(u(gen), u(gen), u(gen)),
        c(u(gen), u(gen), u(gen));
    EXPECT_EQ(distance(a, b), distance(b, a));
    EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c) + 1e-12);
  }
}

TEST(NoiseFloor, Examples) {
  EXPECT_NEAR(noise_floor(20, RadioConfig{7}), -93.99, 0.01);
  EXPECT_NEAR(noise_floor(1, RadioConfig{0}), -114.0, 1e-12);
  EXPECT_NEAR(noise_floor(20, RadioConfig{0}), -100.99, 0.01);
  EXPECT_THROW(noise_floor(0, RadioConfig{}), DomainError);
}

TEST(RecordToSample, LinkBudget) {
  const RadioConfig cfg{7};
  const auto s = record_to_sample(warehouse_record(30), cfg);
  EXPECT_DOUBLE_EQ(s.distance, 5.0);
  EXPECT_NEAR(s.path_loss, 56.99, 0.01);
  EXPECT_NEAR(record_to_sample(warehouse_record(0), cfg).path_loss, 86.99, 0.01);
}

TEST(RecordToSample, CoincidentNodesRejected) {
  auto r = warehouse_record(30);
  r.rx_pos = r.tx_pos;
  EXPECT_THROW(record_to_sample(r, RadioConfig{}), ValidationError);
}

TEST(RecordToSample, UnitSlopeInSnr) {
  const RadioConfig cfg{7};
  for (double snr = -10; snr < 50; snr += 0.5) {
    const double a = record_to_sample(warehouse_record(snr), cfg).path_loss;
    const double b = record_to_sample(warehouse_record(snr + 1.0), cfg).path_loss;
    EXPECT_LT(b, a);
    EXPECT_NEAR(a - b, 1.0, 1e-9);
  }
}

TEST(Serialization, RawRoundTripIsExact) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-100, 100);
  std::vector<TraceRecord> recs;
  double t = 0;
  for (int i = 0; i < 200; ++i) {
    TraceRecord r = warehouse_record(u(gen));
    t += std::abs(u(gen));
    r.t = t;
    r.tx_pos = Position(u(gen), u(gen), u(gen));
    r.rx_pos = Position(u(gen), u(gen), u(gen));
    r.tx_power = u(gen);
    recs.push_back(r);
  }
  const auto path = write_temp("roundtrip.csv", serialize_raw(recs));
  const auto back = parse_raw(path);
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(back[i].t, recs[i].t);
    EXPECT_EQ(back[i].snr, recs[i].snr);
    EXPECT_EQ(back[i].tx_pos, recs[i].tx_pos);
    EXPECT_EQ(back[i].rx_pos, recs[i].rx_pos);
    EXPECT_EQ(back[i].tx_power, recs[i].tx_power);
  }
  EXPECT_EQ(serialize_raw(back), serialize_raw(recs));
}

}  // namespace
}  // namespace mlpl
