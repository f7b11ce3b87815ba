#pragma once

#include <ade/rational.hpp>
#include <ade/exactlin.hpp>
#include <ade/dynkin.hpp>
#include <ade/spectra.hpp>
#include <ade/roots.hpp>
#include <ade/embed.hpp>
#include <ade/io.hpp>
