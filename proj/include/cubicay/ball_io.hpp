#pragma once

#include <string>

#include "cubicay/ball.hpp"

namespace cubicay {

// Canonical interchange format. Deterministic: vertices in shortlex order,
// edges sorted by (u, v, label).
std::string ball_to_json(const CayleyBall& ball);
CayleyBall ball_from_json(const std::string& text);

std::string ball_to_dot(const CayleyBall& ball);
std::string ball_to_graphml(const CayleyBall& ball);

// format is one of "dot", "graphml", "json"; throws UnknownFormat otherwise.
std::string export_ball(const CayleyBall& ball, const std::string& format);

}  // namespace cubicay
