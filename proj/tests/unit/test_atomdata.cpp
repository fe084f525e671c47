#include "doctest.h"
#include "oracle.hpp"

#include "ionforge/atomdata.hpp"
#include "ionforge/design_file.hpp"
#include "ionforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace ionforge;

TEST_CASE("CODATA constants")
{
    constexpr auto k = constants();
    static_assert(k.planck_h == 6.62607015e-34);
    static_assert(k.speed_of_light == 299792458.0);
    CHECK(k.elementary_charge == 1.602176634e-19);
    CHECK(k.atomic_mass_unit == 1.66053906660e-27);
    CHECK(k.hbar * 2 * std::numbers::pi == doctest::Approx(k.planck_h).epsilon(1e-15));
}

TEST_CASE("Cd+ registry entry")
{
    const auto cd = load_species("Cd+");
    CHECK(cd.linewidth == 2 * std::numbers::pi * 44e6);
    CHECK(cd.wavelength == 214e-9);
    CHECK(cd.mass_number == 111);
    CHECK(cd.fine_structure == 2 * std::numbers::pi * 74e12);
    CHECK(cd.data_provenance == DataProvenance::Paper);
    CHECK(cd.mass() == 111 * oracle::u);
}

TEST_CASE("Ca+ is an external reference")
{
    const auto ca = load_species("Ca+");
    CHECK(ca.data_provenance == DataProvenance::ExternalReference);
    CHECK(ca.mass_number == 40);
    // eta at tau_p = 0.5 us, nu_str = 8 MHz
    const double eta = std::sqrt(oracle::recoil(ca.mass_number, ca.wavelength) / 8e6);
    CHECK(eta == doctest::Approx(0.06).epsilon(0.1));
}

TEST_CASE("registry lookups")
{
    auto names = registered_species();
    CHECK(std::ranges::find(names, "Cd+") != names.end());
    CHECK(std::ranges::find(names, "Ca+") != names.end());
    CHECK_THROWS_AS(load_species("Xe+"), ValidationError);
    CHECK_THROWS_AS(load_species(""), ValidationError);
}

TEST_CASE("species validation")
{
    auto s = load_species("Cd+");
    s.linewidth = 0;
    CHECK_THROWS_AS(validate(s), ValidationError);
    s = load_species("Cd+");
    s.linewidth = -1;
    CHECK_THROWS_AS(load_species(s), ValidationError);
    s = load_species("Cd+");
    s.wavelength = 0;
    CHECK_THROWS_AS(validate(s), ValidationError);
    s = load_species("Cd+");
    s.mass_number = 0.5;
    CHECK_THROWS_AS(validate(s), ValidationError);
    s = load_species("Cd+");
    s.fine_structure = s.linewidth;
    CHECK_THROWS_AS(validate(s), ValidationError);
    try {
        s = load_species("Cd+");
        s.linewidth = 0;
        validate(s);
    } catch (const ValidationError& err) {
        CHECK(err.key() == "species.linewidth");
    }
}

TEST_CASE("unit convention splits angular and ordinary symbols")
{
    constexpr auto conv = unit_convention();
    for (auto a : conv.angular_symbols)
        CHECK(std::ranges::find(conv.ordinary_symbols, a) == conv.ordinary_symbols.end());
    CHECK(std::ranges::find(conv.angular_symbols, "Gamma") != conv.angular_symbols.end());
    CHECK(std::ranges::find(conv.ordinary_symbols, "nu_spl") != conv.ordinary_symbols.end());
    CHECK(std::ranges::find(conv.ordinary_symbols, "R") != conv.ordinary_symbols.end());
}

TEST_CASE("provenance strings round trip")
{
    for (auto p : {DataProvenance::Paper, DataProvenance::ExternalReference, DataProvenance::User})
        CHECK(data_provenance_from_string(to_string(p)) == p);
    CHECK_THROWS_AS(data_provenance_from_string("nonsense"), ValidationError);
}

TEST_CASE("species record round trips through the design format")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        DesignFile f;
        f.config.species_ref.clear();
        f.config.species = IonSpecies{
            .name = "X" + std::to_string(i),
            .linewidth = 2 * std::numbers::pi * (1e6 + 1e8 * unit(rng)),
            .wavelength = 150e-9 + 1e-6 * unit(rng),
            .mass_number = 1 + 200 * unit(rng),
            .fine_structure = 2 * std::numbers::pi * (1e12 + 1e14 * unit(rng)),
            .data_provenance = DataProvenance::User,
        };
        const auto back = parse_design(serialize_design(f));
        CHECK(back.config.species == f.config.species);
        CHECK(load_species(back.config.species) == f.config.species);
    }
}
