#include "mulrec/classify.hpp"

namespace mulrec {

Classification classify(const MoebiusParams& params, const RunConfig& cfg) {
  if (is_empty(params)) return {Verdict::Empty, std::nullopt, std::nullopt};

  if (params.a == params.c) {
    if (divides(params.a, lcm0(params.b, params.d))) {
      ReductionCert red = [&] {
        NormalizeResult norm = normalize(params.a, params.b, params.d);
        ReductionCert r = reduce(norm.a, norm.b, norm.d);
        r.orig_a = params.a;
        r.orig_b = params.b;
        r.orig_d = params.d;
        r.g = norm.g;
        r.swapped = norm.swapped;
        return r;
      }();
      return {Verdict::Recurrent, red, std::nullopt};
    }
    // Smallest prime with v_p(a) > max(v_p(b), v_p(d)); primes ascend in the
    // factorization, so the first qualifying one is the smallest.
    for (const auto& pp : factorize(params.a)) {
      Int p(static_cast<long>(pp.p));
      ExtVal va = ExtVal::of(pp.e);
      ExtVal vb = vp(p, params.b);
      ExtVal vd = vp(p, params.d);
      ExtVal vmax = vb > vd ? vb : vd;
      if (!(vmax < va)) continue;
      CaseInfo info;
      if (vb == vd) {
        long k = static_cast<long>(vp(p, Int(params.b - params.d)).value());
        info = CaseInfo{WitnessCase::PAdicEqual, p, k};
      } else {
        long long db = vb.value(), dd = vd.value();
        long k = static_cast<long>(db > dd ? db - dd : dd - db);
        info = CaseInfo{WitnessCase::PAdicUnequal, p, k};
      }
      ColoringSpec coloring = derive_spec(info, params);
      CMFSpec witness = witness_for(params, info, cfg);
      Int bound = info.kind == WitnessCase::PAdicEqual ? color_count(coloring) : Int(2);
      return {Verdict::NonRecurrent, std::nullopt,
              NonRecurrentInfo{info, coloring, witness, bound}};
    }
    throw verification_error("classify: no qualifying prime for a non-recurrent a = c case");
  }

  CaseInfo info{WitnessCase::Archimedean, Int(0), 0};
  ColoringSpec coloring = derive_spec(info, params);
  CMFSpec witness = witness_for(params, info, cfg);
  Int bound(std::get<ArchimedeanSpec>(coloring).k);
  return {Verdict::NonRecurrent, std::nullopt,
          NonRecurrentInfo{info, coloring, witness, bound}};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Empty: return "Empty";
    case Verdict::Recurrent: return "Recurrent";
    case Verdict::NonRecurrent: return "NonRecurrent";
  }
  return "?";
}

std::string case_name(WitnessCase c) {
  switch (c) {
    case WitnessCase::Archimedean: return "i";
    case WitnessCase::PAdicEqual: return "ii";
    case WitnessCase::PAdicUnequal: return "iii";
  }
  return "?";
}

}  // namespace mulrec
