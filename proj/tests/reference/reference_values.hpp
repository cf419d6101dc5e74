// Generated by generate_reference_values.py -- do not edit by hand.
// Oracle: mpmath 50-digit series summation; values frozen at 20 digits.
#pragma once

#include <complex>

namespace gsr::testref {

inline const std::complex<double> kRefTricomiU_a03_b1p07i_z2{0.77677696980076990733, 0.059438587394278619739};
inline const std::complex<double> kRefKummerM_a15p05i_b2p1i_z8{777.09145030164899563, -600.60899127713923964};
inline const std::complex<double> kRefKummerM_a06_b13_z50{2.0323573882050679697e+20, 0.0};
inline const std::complex<double> kRefWhitM_a1_b03i_z2{0.0012928644017130375436, 0.63192348776587803383};
inline const std::complex<double> kRefWhitW_a1_b04i_z002{-0.10483009310432315339, -1.6165490998883888888e-57};
inline const std::complex<double> kRefWhitW_a1_b04i_z5{0.37797749045444153824, -1.4091711936167335077e-55};
inline const std::complex<double> kRefWhitW_a0_b12i_z01{-0.052783210175844013306, 2.7406687042620392657e-56};
inline const std::complex<double> kRefWhitW_a1_b03i_z45{7.5562297963956118508e-9, -3.6837520468111914769e-63};
inline const std::complex<double> kRefWhitW_a05_b025_z12{0.0086297872097025321173, 0.0};
inline const std::complex<double> kRefScaledW_a1_beta450_z44e5{4349664.8766305422245, -1.6447926984000426061e-47};
inline const std::complex<double> kRefWhitWdb_a1_b03_z002{0.21422945559990655526, 0.0};
inline const std::complex<double> kRefWhitWdb_a1_b05i_z002{0.0, -0.17035366427940270547};
inline const std::complex<double> kRefWhitWdz_a1_b06i_z005{-0.99811173270560902634, 9.7140771086153596433e-95};
inline const std::complex<double> kRefEi_m1{-0.21938393439552027368, 0.0};
inline const std::complex<double> kRefEi_m02{-1.2226505441838930883, 0.0};
inline const std::complex<double> kRefEi_m50{-3.7832640295504590187e-24, 0.0};
inline const std::complex<double> kRefEi_m6{-0.00036008245216265865930, 0.0};
inline const std::complex<double> kRefEi_m45{-0.0020734007547146144329, 0.0};
inline const std::complex<double> kRefEi_ln2{1.0451637801174927848, 0.0};
inline const std::complex<double> kRefEi_29{140599195758.40690473, 0.0};
inline const std::complex<double> kRefEi_35{46690550144661.595445, 0.0};
inline const std::complex<double> kRefEi_700{1.4509787360525608526e+301, 0.0};
inline const std::complex<double> kRefEi_m1em8{-17.843465089050832587, 0.0};
inline const std::complex<double> kRefGamma_37_m2i{-1.7869005555024368117, -1.4814522429760895360};
inline const std::complex<double> kRefGamma_m33_22i{-0.0011072084568542582496, -0.00066467222361039349620};
inline const std::complex<double> kRefGamma_05_50i{9.0332043526006192339e-35, 1.7263622522690938061e-34};
inline const std::complex<double> kRefLogGamma_10{12.801827480081469611, 0.0};

}  // namespace gsr::testref
