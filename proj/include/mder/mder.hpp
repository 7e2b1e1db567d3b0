#pragma once

#include <mder/enumerator.hpp>
#include <mder/errors.hpp>
#include <mder/exactcore.hpp>
#include <mder/golden.hpp>
#include <mder/guesser.hpp>
#include <mder/laguerre.hpp>
#include <mder/oracle.hpp>
#include <mder/recurrence.hpp>
#include <mder/selftest.hpp>
#include <mder/serialize.hpp>
#include <mder/shape.hpp>
