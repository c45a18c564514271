#pragma once

#include <filesystem>
#include <string>

#include "macorr/fields.hpp"

namespace macorr {

void write_field(const std::filesystem::path& path, const ScalarField& f);
void write_field(const std::filesystem::path& path, const VectorField2& f);
void write_field(const std::filesystem::path& path, const SymMatField2& f);
void write_field(const std::filesystem::path& path, const AffineVectorField& f);

/// Header type string of a .fld file ("scalar", "vector", "symmat", "affine").
std::string field_type(const std::filesystem::path& path);

ScalarField read_scalar(const std::filesystem::path& path);
VectorField2 read_vector(const std::filesystem::path& path);
SymMatField2 read_symmat(const std::filesystem::path& path);
AffineVectorField read_affine(const std::filesystem::path& path);

/// Binary PGM heatmap, linear gray ramp over [min, max].
void write_heatmap(const std::filesystem::path& path, const ScalarField& f);

}  // namespace macorr
