#pragma once

// Anchor strings printed next to each check in reports.
namespace qfw::anchors {

inline constexpr const char* kDivides = "Lemma 1.1";
inline constexpr const char* kSimilar = "Sec 1 similarity";
inline constexpr const char* kQfBimodule = "Def 3.5";
inline constexpr const char* kFrobBimodule = "Sec 3 Frobenius bimodule";
inline constexpr const char* kDualSequence = "Rmk 3.9";
inline constexpr const char* kQfTensor = "Prop 3.10";
inline constexpr const char* kQfExtension = "Cor 4.2 (ii)";
inline constexpr const char* kQfExtensionPrime = "Cor 4.2 (ii')";
inline constexpr const char* kFrobExtension = "Intro Frobenius extension";
inline constexpr const char* kCompose = "Cor 4.3";
inline constexpr const char* kPairWitness = "Prop 2.5";
inline constexpr const char* kGraded = "Thm 5.1 (iii)";
inline constexpr const char* kCoringAxioms = "Sec 1 coring axioms";
inline constexpr const char* kCoringIII = "Thm 7.3 (iii)";
inline constexpr const char* kCoringIV = "Thm 7.3 (iv)";
inline constexpr const char* kCoringVI = "Thm 7.3 (vi)";
inline constexpr const char* kCoringVII = "Thm 7.3 (vii)";
inline constexpr const char* kCoringVIII = "Thm 7.3 (viii)";
inline constexpr const char* kSweedler = "Prop 7.6";
inline constexpr const char* kCoringHom = "Sec 7 coring homomorphism";
inline constexpr const char* kTrivialCoringReduction = "Rmk 7.2 (1)";
inline constexpr const char* kDecompose = "Krull-Schmidt";

}  // namespace qfw::anchors
