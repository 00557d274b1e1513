// Umbrella header.
#pragma once

#include "qrealism/linalg.hpp"
#include "qrealism/density.hpp"
#include "qrealism/entropy.hpp"
#include "qrealism/observable.hpp"
#include "qrealism/realism.hpp"
#include "qrealism/discord.hpp"
#include "qrealism/bounds.hpp"
#include "qrealism/interferometer.hpp"
#include "qrealism/closed_forms.hpp"
#include "qrealism/detector.hpp"
#include "qrealism/pulse.hpp"
#include "qrealism/pulse_io.hpp"
#include "qrealism/random.hpp"
#include "qrealism/tomography.hpp"
#include "qrealism/figures.hpp"
#include "qrealism/verify.hpp"
