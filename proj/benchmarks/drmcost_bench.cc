// Host-side throughput of the real primitives and of the pricing step.
// These measure this machine, not the modeled terminal.

#include <benchmark/benchmark.h>

#include "drmcost/cost/cost_model.h"
#include "drmcost/crypto/primitives.h"
#include "drmcost/crypto/rsa.h"
#include "drmcost/scenario/scenario.h"

namespace {

using namespace drmcost;

void BM_Sha1(benchmark::State& state) {
  const Bytes data = scenario::generate_content(static_cast<std::uint64_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(crypto::sha1(data));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_Sha1)->Arg(1024)->Arg(30'720)->Arg(3'670'016);

void BM_AesCbcDecrypt(benchmark::State& state) {
  const auto key = crypto::SymmetricKey::generate();
  const auto iv = crypto::random_iv();
  const Bytes ct = crypto::aes_cbc_encrypt(key, iv, scenario::generate_content(state.range(0), 2));
  for (auto _ : state) benchmark::DoNotOptimize(crypto::aes_cbc_decrypt(key, iv, ct));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_AesCbcDecrypt)->Arg(1024)->Arg(30'720)->Arg(3'670'016);

void BM_RsaPrivate(benchmark::State& state) {
  const auto kp = crypto::generate_rsa_keypair();
  const auto m = crypto::BigUint::random_below(kp.modulus);
  for (auto _ : state) benchmark::DoNotOptimize(crypto::rsa_apply(kp.modulus, kp.private_exponent, m));
}
BENCHMARK(BM_RsaPrivate);

void BM_RsaPublic(benchmark::State& state) {
  const auto kp = crypto::generate_rsa_keypair();
  const auto m = crypto::BigUint::random_below(kp.modulus);
  for (auto _ : state) benchmark::DoNotOptimize(crypto::rsa_apply(kp.modulus, kp.public_exponent, m));
}
BENCHMARK(BM_RsaPublic);

void BM_EstimateMusicTrace(benchmark::State& state) {
  const auto trace = scenario::execute_scenario(scenario::music_player(), {}).trace;
  const auto variant = cost::ArchVariant::mixed();
  for (auto _ : state) benchmark::DoNotOptimize(cost::estimate(trace, variant));
}
BENCHMARK(BM_EstimateMusicTrace);

void BM_RingtoneScenario(benchmark::State& state) {
  scenario::RunOptions opts;
  opts.keys = scenario::ActorKeys::generate();
  for (auto _ : state) benchmark::DoNotOptimize(scenario::execute_scenario(scenario::ringtone(), opts));
}
BENCHMARK(BM_RingtoneScenario)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
