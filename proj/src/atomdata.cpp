#include "ionforge/atomdata.hpp"

#include "ionforge/error.hpp"

#include <cmath>

namespace ionforge {

namespace {

IonSpecies cadmium()
{
    return IonSpecies{
        .name = "Cd+",
        .linewidth = units::angular(44 * units::megahertz),
        .wavelength = 214 * units::nanometre,
        .mass_number = 111,
        .fine_structure = units::angular(74 * units::terahertz),
        .data_provenance = DataProvenance::Paper,
    };
}

// 4P1/2 lifetime 7.1 ns; 4P1/2-4P3/2 interval 222.9 cm^-1.
IonSpecies calcium()
{
    return IonSpecies{
        .name = "Ca+",
        .linewidth = units::angular(22.4 * units::megahertz),
        .wavelength = 397 * units::nanometre,
        .mass_number = 40,
        .fine_structure = units::angular(6.68 * units::terahertz),
        .data_provenance = DataProvenance::ExternalReference,
    };
}

}  // namespace

std::string_view to_string(DataProvenance p)
{
    switch (p) {
    case DataProvenance::Paper: return "paper";
    case DataProvenance::ExternalReference: return "external-reference";
    case DataProvenance::User: return "user";
    }
    return "user";
}

DataProvenance data_provenance_from_string(std::string_view s)
{
    if (s == "paper")
        return DataProvenance::Paper;
    if (s == "external-reference")
        return DataProvenance::ExternalReference;
    if (s == "user")
        return DataProvenance::User;
    throw ValidationError("unknown species provenance '" + std::string(s) + "'", "species.provenance");
}

void validate(const IonSpecies& s)
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (s.name.empty())
        throw ValidationError("species name must not be empty", "species.name");
    if (!positive(s.linewidth))
        throw ValidationError("species linewidth must be > 0", "species.linewidth");
    if (!positive(s.wavelength))
        throw ValidationError("species wavelength must be > 0", "species.wavelength");
    if (!(std::isfinite(s.mass_number) && s.mass_number >= 1.0))
        throw ValidationError("species mass number must be >= 1", "species.mass_number");
    if (!(std::isfinite(s.fine_structure) && s.fine_structure > s.linewidth))
        throw ValidationError("species fine structure must exceed the linewidth", "species.fine_structure");
}

IonSpecies load_species(std::string_view name)
{
    if (name == "Cd+")
        return cadmium();
    if (name == "Ca+")
        return calcium();
    throw ValidationError("unknown species '" + std::string(name) + "'", "species.name");
}

IonSpecies load_species(const IonSpecies& record)
{
    validate(record);
    return record;
}

std::vector<std::string> registered_species()
{
    return {"Cd+", "Ca+"};
}

}  // namespace ionforge
