// Prints the reference values that the test suite and the acceptance suite
// freeze as literals. Rerun after any change to the reference integrator and
// paste the output back into the tests.

#include <cstdio>

#include <casimir/system.hpp>

#include "oracle.hpp"

namespace {

casimir::PlateSystem make(casimir::DielectricSpec mat, double a, double T,
                          casimir::ZeroFreqPrescription p) {
    casimir::PlateSystem sys;
    sys.material = std::move(mat);
    sys.separation_a = a;
    sys.temperature_T = T;
    sys.prescription = p;
    return sys;
}

void dump_point(const char* label, const casimir::PlateSystem& sys) {
    const long double F = oracle::free_energy(sys);
    const long double E = oracle::zero_point_energy(sys);
    std::printf("%-28s F = %.15Lg  E = %.15Lg\n", label, F, E);
}

void dump_entropy(const char* label, const casimir::PlateSystem& sys) {
    const long double S = oracle::entropy(sys);
    std::printf("%-28s S = %.15Lg  (%.15Lg MeV m^-2 K^-1)\n", label, S,
                S / 1.602176634e-13L);
}

} // namespace

int main() {
    using casimir::ZeroFreqPrescription;
    const casimir::DielectricSpec ideal = casimir::IdealMetal{};
    const casimir::DielectricSpec plasma = casimir::Plasma{1.9e16};
    const casimir::DielectricSpec drude =
        casimir::Drude{1.9e16, casimir::GammaConstant{9.6e13}};

    std::printf("# free energy / zero-point energy reference points (J/m^2)\n");
    dump_point("ideal a=1um T=300K",
               make(ideal, 1e-6, 300.0, ZeroFreqPrescription::ModelIntrinsic));
    dump_point("plasma a=2um T=300K",
               make(plasma, 2e-6, 300.0, ZeroFreqPrescription::ModelIntrinsic));
    dump_point("drude eq10 a=2um T=300K",
               make(drude, 2e-6, 300.0, ZeroFreqPrescription::ModifiedTransverse));
    dump_point("plasma eq9 a=0.5um T=77K",
               make(plasma, 0.5e-6, 77.0, ZeroFreqPrescription::IdealMetalRule));
    dump_point("drude a=1um T=600K",
               make(drude, 1e-6, 600.0, ZeroFreqPrescription::ModelIntrinsic));

    std::printf("\n# entropy reference points, a = 2 um, T = 300 K\n");
    dump_entropy("drude intrinsic",
                 make(drude, 2e-6, 300.0, ZeroFreqPrescription::ModelIntrinsic));
    dump_entropy("drude eq9",
                 make(drude, 2e-6, 300.0, ZeroFreqPrescription::IdealMetalRule));
    dump_entropy("drude eq10",
                 make(drude, 2e-6, 300.0, ZeroFreqPrescription::ModifiedTransverse));
    dump_entropy("plasma intrinsic",
                 make(plasma, 2e-6, 300.0, ZeroFreqPrescription::ModelIntrinsic));
    dump_entropy("plasma eq9",
                 make(plasma, 2e-6, 300.0, ZeroFreqPrescription::IdealMetalRule));
    dump_entropy("ideal",
                 make(ideal, 2e-6, 300.0, ZeroFreqPrescription::ModelIntrinsic));
    return 0;
}
