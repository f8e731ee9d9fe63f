#pragma once

#include <nonoverlap/certificate.hpp>
#include <nonoverlap/corollary.hpp>
#include <nonoverlap/density_profile.hpp>
#include <nonoverlap/errors.hpp>
#include <nonoverlap/extremal.hpp>
#include <nonoverlap/families.hpp>
#include <nonoverlap/overlap.hpp>
#include <nonoverlap/parallel.hpp>
#include <nonoverlap/ratio.hpp>
#include <nonoverlap/text_io.hpp>
#include <nonoverlap/word.hpp>
#include <nonoverlap/word_set.hpp>
