#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "conekit/basis_cache.hpp"
#include "test_support.hpp"

using namespace conekit;
using namespace conekit::testing;
namespace fs = std::filesystem;

namespace {

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("conekit_cache_test_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

Ideal sample(const RingPtr& r) { return I(r, {"x0^2 - x1*x2", "x1^3 - x0*x2^2 + x2^3"}); }

}  // namespace

TEST_F(CacheTest, HitReturnsTheSameBasis) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 3), Field::prime(31991));
  auto cache = std::make_shared<BasisCache>(dir_);
  Engine cached(EngineCaps{}, 1, cache), fresh(EngineCaps{}, 1, cache), plain;
  auto first = printed(cached.groebner(sample(r)));
  auto second = printed(fresh.groebner(sample(r)));
  EXPECT_EQ(first, second);
  EXPECT_EQ(first, printed(plain.groebner(sample(r))));
  auto st = cache->stats();
  EXPECT_EQ(st.entries, 1U);
  EXPECT_EQ(st.hits, 1U);
  EXPECT_EQ(st.misses, 1U);
}

TEST_F(CacheTest, KeyIgnoresGeneratorOrderAndScaling) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 3), Field::prime(31991));
  Ideal a = I(r, {"x0^2 - x1*x2", "x1^3 - x2^3"});
  Ideal b = I(r, {"x1^3 - x2^3", "3*x0^2 - 3*x1*x2"});
  EXPECT_EQ(BasisCache::make_key(a, MonomialOrder::grevlex()), BasisCache::make_key(b, MonomialOrder::grevlex()));
  EXPECT_NE(BasisCache::make_key(a, MonomialOrder::grevlex()), BasisCache::make_key(a, MonomialOrder::lex()));
}

TEST_F(CacheTest, VerifyDetectsTamperingAndClearEmpties) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 3), Field::prime(31991));
  auto cache = std::make_shared<BasisCache>(dir_);
  Engine cached(EngineCaps{}, 1, cache);
  cached.groebner(sample(r));
  cached.groebner(sample(r), MonomialOrder::lex());
  auto ok = cache->verify();
  EXPECT_EQ(ok.checked, 2U);
  EXPECT_EQ(ok.corrupt + ok.mismatched, 0U);

  fs::path victim = fs::directory_iterator(dir_)->path();
  {
    std::ofstream out(victim, std::ios::app);
    out << "x0\n";
  }
  auto bad = cache->verify();
  EXPECT_EQ(bad.mismatched, 1U);
  EXPECT_EQ(cache->clear(), 2U);
  EXPECT_EQ(cache->stats().entries, 0U);
}

TEST_F(CacheTest, CorruptEntryIsRecomputed) {
  RingPtr r = make_ring(AmbientSpace::projective("x", 3), Field::prime(31991));
  auto cache = std::make_shared<BasisCache>(dir_);
  Engine cached(EngineCaps{}, 1, cache), plain;
  cached.groebner(sample(r));
  fs::path victim = fs::directory_iterator(dir_)->path();
  {
    std::ofstream out(victim, std::ios::trunc);
    out << "garbage";
  }
  Engine fresh(EngineCaps{}, 1, cache);
  EXPECT_EQ(printed(fresh.groebner(sample(r))), printed(plain.groebner(sample(r))));
  EXPECT_EQ(cache->verify().corrupt, 0U);
}
