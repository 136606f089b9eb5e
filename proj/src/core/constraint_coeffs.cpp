// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// Generated by scripts/gen_constraint_coeffs.py. Do not edit by hand.

#include "core/constraint_coeffs.hpp"

namespace essmat {

void build_constraint_matrix(const Eigen::Matrix<double, 4, 9>& basis,
                             Eigen::Matrix<double, 10, 20>& M) {
  const double b00 = basis(0, 0);
  const double b01 = basis(0, 1);
  const double b02 = basis(0, 2);
  const double b03 = basis(0, 3);
  const double b04 = basis(0, 4);
  const double b05 = basis(0, 5);
  const double b06 = basis(0, 6);
  const double b07 = basis(0, 7);
  const double b08 = basis(0, 8);
  const double b10 = basis(1, 0);
  const double b11 = basis(1, 1);
  const double b12 = basis(1, 2);
  const double b13 = basis(1, 3);
  const double b14 = basis(1, 4);
  const double b15 = basis(1, 5);
  const double b16 = basis(1, 6);
  const double b17 = basis(1, 7);
  const double b18 = basis(1, 8);
  const double b20 = basis(2, 0);
  const double b21 = basis(2, 1);
  const double b22 = basis(2, 2);
  const double b23 = basis(2, 3);
  const double b24 = basis(2, 4);
  const double b25 = basis(2, 5);
  const double b26 = basis(2, 6);
  const double b27 = basis(2, 7);
  const double b28 = basis(2, 8);
  const double b30 = basis(3, 0);
  const double b31 = basis(3, 1);
  const double b32 = basis(3, 2);
  const double b33 = basis(3, 3);
  const double b34 = basis(3, 4);
  const double b35 = basis(3, 5);
  const double b36 = basis(3, 6);
  const double b37 = basis(3, 7);
  const double b38 = basis(3, 8);

  const double t0 = b00*b04;
  const double t1 = b01*b05;
  const double t2 = b02*b03;
  const double t3 = b00*b05;
  const double t4 = b01*b03;
  const double t5 = b02*b04;
  const double t6 = b14*b18;
  const double t7 = b15*b16;
  const double t8 = b13*b17;
  const double t9 = b15*b17;
  const double t10 = b13*b18;
  const double t11 = b14*b16;
  const double t12 = b08*b14;
  const double t13 = b06*b15;
  const double t14 = b07*b13;
  const double t15 = b03*b12;
  const double t16 = b04*b10;
  const double t17 = b05*b11;
  const double t18 = b07*b15;
  const double t19 = b08*b13;
  const double t20 = b06*b14;
  const double t21 = b03*b11;
  const double t22 = b04*b12;
  const double t23 = b05*b10;
  const double t24 = b00*b08;
  const double t25 = b01*b06;
  const double t26 = b02*b07;
  const double t27 = b03*b07;
  const double t28 = b04*b08;
  const double t29 = b05*b06;
  const double t30 = b00*b07;
  const double t31 = b01*b08;
  const double t32 = b02*b06;
  const double t33 = b03*b08;
  const double t34 = b04*b06;
  const double t35 = b05*b07;
  const double t36 = b10*b14;
  const double t37 = b10*b18;
  const double t38 = b11*b15;
  const double t39 = b11*b16;
  const double t40 = b12*b13;
  const double t41 = b12*b17;
  const double t42 = b10*b15;
  const double t43 = b10*b17;
  const double t44 = b11*b13;
  const double t45 = b11*b18;
  const double t46 = b12*b14;
  const double t47 = b12*b16;
  const double t48 = b00*b14;
  const double t49 = b00*b18;
  const double t50 = b01*b15;
  const double t51 = b01*b16;
  const double t52 = b02*b13;
  const double t53 = b02*b17;
  const double t54 = b03*b17;
  const double t55 = b04*b18;
  const double t56 = b05*b16;
  const double t57 = b06*b11;
  const double t58 = b07*b12;
  const double t59 = b08*b10;
  const double t60 = b00*b15;
  const double t61 = b00*b17;
  const double t62 = b01*b13;
  const double t63 = b01*b18;
  const double t64 = b02*b14;
  const double t65 = b02*b16;
  const double t66 = b03*b18;
  const double t67 = b04*b16;
  const double t68 = b05*b17;
  const double t69 = b06*b12;
  const double t70 = b07*b10;
  const double t71 = b08*b11;
  const double t72 = b00*b24;
  const double t73 = b01*b25;
  const double t74 = b02*b23;
  const double t75 = b03*b22;
  const double t76 = b04*b20;
  const double t77 = b05*b21;
  const double t78 = b06*b21;
  const double t79 = b07*b22;
  const double t80 = b08*b20;
  const double t81 = b00*b25;
  const double t82 = b01*b23;
  const double t83 = b02*b24;
  const double t84 = b03*b21;
  const double t85 = b04*b22;
  const double t86 = b05*b20;
  const double t87 = b06*b22;
  const double t88 = b07*b20;
  const double t89 = b08*b21;
  const double t90 = b00*b34;
  const double t91 = b01*b35;
  const double t92 = b02*b33;
  const double t93 = b03*b32;
  const double t94 = b04*b30;
  const double t95 = b05*b31;
  const double t96 = b06*b31;
  const double t97 = b07*b32;
  const double t98 = b08*b30;
  const double t99 = b00*b35;
  const double t100 = b01*b33;
  const double t101 = b02*b34;
  const double t102 = b03*b31;
  const double t103 = b04*b32;
  const double t104 = b05*b30;
  const double t105 = b06*b32;
  const double t106 = b07*b30;
  const double t107 = b08*b31;
  const double t108 = b10*b24;
  const double t109 = b11*b25;
  const double t110 = b12*b23;
  const double t111 = b13*b22;
  const double t112 = b14*b20;
  const double t113 = b15*b21;
  const double t114 = b16*b21;
  const double t115 = b17*b22;
  const double t116 = b18*b20;
  const double t117 = b10*b25;
  const double t118 = b11*b23;
  const double t119 = b12*b24;
  const double t120 = b13*b21;
  const double t121 = b14*b22;
  const double t122 = b15*b20;
  const double t123 = b16*b22;
  const double t124 = b17*b20;
  const double t125 = b18*b21;
  const double t126 = b10*b34;
  const double t127 = b11*b35;
  const double t128 = b12*b33;
  const double t129 = b13*b32;
  const double t130 = b14*b30;
  const double t131 = b15*b31;
  const double t132 = b16*b31;
  const double t133 = b17*b32;
  const double t134 = b18*b30;
  const double t135 = b10*b35;
  const double t136 = b11*b33;
  const double t137 = b12*b34;
  const double t138 = b13*b31;
  const double t139 = b14*b32;
  const double t140 = b15*b30;
  const double t141 = b16*b32;
  const double t142 = b17*b30;
  const double t143 = b18*b31;
  const double t144 = b20*b24;
  const double t145 = b21*b25;
  const double t146 = b22*b23;
  const double t147 = b20*b25;
  const double t148 = b21*b23;
  const double t149 = b22*b24;
  const double t150 = b20*b34;
  const double t151 = b21*b35;
  const double t152 = b22*b33;
  const double t153 = b23*b32;
  const double t154 = b24*b30;
  const double t155 = b25*b31;
  const double t156 = b20*b35;
  const double t157 = b21*b33;
  const double t158 = b22*b34;
  const double t159 = b23*b31;
  const double t160 = b24*b32;
  const double t161 = b25*b30;
  const double t162 = b31*b35;
  const double t163 = b32*b33;
  const double t164 = b30*b34;
  const double t165 = b32*b34;
  const double t166 = b30*b35;
  const double t167 = b31*b33;
  const double t168 = b01*b01;
  const double t169 = b02*b02;
  const double t170 = b03*b03;
  const double t171 = b06*b06;
  const double t172 = 2*t4;
  const double t173 = 2*t25;
  const double t174 = 2*t2;
  const double t175 = 2*t32;
  const double t176 = b04*b04;
  const double t177 = b05*b05;
  const double t178 = b07*b07;
  const double t179 = b08*b08;
  const double t180 = b11*b11;
  const double t181 = b12*b12;
  const double t182 = b13*b13;
  const double t183 = b16*b16;
  const double t184 = 2*b14;
  const double t185 = 2*b17;
  const double t186 = 2*b15;
  const double t187 = 2*b18;
  const double t188 = b14*b14;
  const double t189 = b15*b15;
  const double t190 = b17*b17;
  const double t191 = b18*b18;
  const double t192 = 2*b00;
  const double t193 = b01*b11;
  const double t194 = b02*b12;
  const double t195 = b03*b13;
  const double t196 = b06*b16;
  const double t197 = 2*b04;
  const double t198 = 2*b07;
  const double t199 = 2*b05;
  const double t200 = 2*b08;
  const double t201 = b00*b00;
  const double t202 = 3*t201;
  const double t203 = 2*b10;
  const double t204 = b10*b10;
  const double t205 = 3*t204;
  const double t206 = b01*t192;
  const double t207 = b02*t192;
  const double t208 = b03*t192;
  const double t209 = 2*t0;
  const double t210 = 2*t3;
  const double t211 = b06*t192;
  const double t212 = 2*t30;
  const double t213 = 2*t24;
  const double t214 = b01*t198;
  const double t215 = b02*t200;
  const double t216 = b11*t203;
  const double t217 = b12*t203;
  const double t218 = b13*t203;
  const double t219 = 2*b24;
  const double t220 = 2*b25;
  const double t221 = b16*t203;
  const double t222 = 2*b27;
  const double t223 = 2*b28;
  const double t224 = b11*t185;
  const double t225 = b12*t187;
  const double t226 = 2*b34;
  const double t227 = 2*b35;
  const double t228 = 2*b37;
  const double t229 = 2*b38;
  const double t230 = 6*b00*b10;
  const double t231 = b11*t192;
  const double t232 = b12*t192;
  const double t233 = b13*t192;
  const double t234 = b16*t192;
  const double t235 = b01*t203;
  const double t236 = 2*b20;
  const double t237 = b01*t185;
  const double t238 = b02*t203;
  const double t239 = b02*t187;
  const double t240 = b03*t203;
  const double t241 = b06*t203;
  const double t242 = b11*t198;
  const double t243 = b12*t200;
  const double t244 = 2*b30;
  const double t245 = b21*b21;
  const double t246 = b22*b22;
  const double t247 = b23*b23;
  const double t248 = b26*b26;
  const double t249 = b01*t236;
  const double t250 = b01*b26;
  const double t251 = b02*t236;
  const double t252 = b02*b26;
  const double t253 = b03*t236;
  const double t254 = b06*t236;
  const double t255 = b21*t198;
  const double t256 = b22*t200;
  const double t257 = b20*b20;
  const double t258 = 3*b00;
  const double t259 = b24*b24;
  const double t260 = b25*b25;
  const double t261 = b27*b27;
  const double t262 = b28*b28;
  const double t263 = b20*b30;
  const double t264 = 6*t263;
  const double t265 = b21*b31;
  const double t266 = b22*b32;
  const double t267 = b23*b33;
  const double t268 = b26*b36;
  const double t269 = b27*b37;
  const double t270 = b28*b38;
  const double t271 = b01*t244;
  const double t272 = b01*b36;
  const double t273 = b02*t244;
  const double t274 = b02*b36;
  const double t275 = b03*t244;
  const double t276 = b06*t244;
  const double t277 = b31*t198;
  const double t278 = b32*t200;
  const double t279 = b31*b31;
  const double t280 = b32*b32;
  const double t281 = b33*b33;
  const double t282 = b36*b36;
  const double t283 = b30*b30;
  const double t284 = b34*b34;
  const double t285 = b35*b35;
  const double t286 = b37*b37;
  const double t287 = b38*b38;
  const double t288 = b11*t236;
  const double t289 = b11*b26;
  const double t290 = b12*t236;
  const double t291 = b12*b26;
  const double t292 = b13*t236;
  const double t293 = b16*t236;
  const double t294 = b21*t185;
  const double t295 = b22*t187;
  const double t296 = 3*b10;
  const double t297 = b11*t244;
  const double t298 = b11*b36;
  const double t299 = b12*t244;
  const double t300 = b12*b36;
  const double t301 = b13*t244;
  const double t302 = b16*t244;
  const double t303 = b31*t185;
  const double t304 = b32*t187;
  const double t305 = b21*b26;
  const double t306 = b22*b26;
  const double t307 = b37*t222;
  const double t308 = b38*t223;
  const double t309 = b21*b36;
  const double t310 = b22*b36;
  const double t311 = b26*b31;
  const double t312 = b26*b32;
  const double t313 = b31*b36;
  const double t314 = b32*b36;
  const double t315 = 2*b13;
  const double t316 = 2*b16;
  const double t317 = 2*b03;
  const double t318 = 2*b06;
  const double t319 = 2*t194;
  const double t320 = b04*t184;
  const double t321 = 3*t168;
  const double t322 = 3*t180;
  const double t323 = 2*b22;
  const double t324 = b01*b02;
  const double t325 = b01*t197;
  const double t326 = 2*b32;
  const double t327 = 2*b23;
  const double t328 = 2*b26;
  const double t329 = b11*b12;
  const double t330 = b11*t184;
  const double t331 = 2*b33;
  const double t332 = 2*b36;
  const double t333 = b10*t192;
  const double t334 = 6*t193;
  const double t335 = b01*b12;
  const double t336 = b01*t184;
  const double t337 = b02*b11;
  const double t338 = b11*t197;
  const double t339 = b20*t192;
  const double t340 = b26*t192;
  const double t341 = b02*b21;
  const double t342 = b02*t222;
  const double t343 = b21*t197;
  const double t344 = b06*b20;
  const double t345 = 3*b01;
  const double t346 = b30*t192;
  const double t347 = b36*t192;
  const double t348 = 6*t265;
  const double t349 = 2*t266;
  const double t350 = b34*t219;
  const double t351 = b02*b31;
  const double t352 = b37*t223;
  const double t353 = b31*t197;
  const double t354 = b06*b30;
  const double t355 = b38*t228;
  const double t356 = b20*t203;
  const double t357 = b26*t203;
  const double t358 = b12*b21;
  const double t359 = b12*t222;
  const double t360 = b21*t184;
  const double t361 = b16*b20;
  const double t362 = 3*b11;
  const double t363 = b30*t203;
  const double t364 = b36*t203;
  const double t365 = 2*t268;
  const double t366 = b12*b31;
  const double t367 = b31*t184;
  const double t368 = b16*b30;
  const double t369 = b20*b26;
  const double t370 = b22*t222;
  const double t371 = b30*t236;
  const double t372 = b20*b36;
  const double t373 = b26*b30;
  const double t374 = b32*t222;
  const double t375 = b30*b36;
  const double t376 = 2*t193;
  const double t377 = b05*t186;
  const double t378 = 3*t169;
  const double t379 = 3*t181;
  const double t380 = 2*t324;
  const double t381 = b02*t199;
  const double t382 = 2*t329;
  const double t383 = b12*t186;
  const double t384 = 2*b21;
  const double t385 = 6*t194;
  const double t386 = b02*t186;
  const double t387 = b12*t199;
  const double t388 = 2*b31;
  const double t389 = b01*b21;
  const double t390 = b01*t222;
  const double t391 = b22*t199;
  const double t392 = 3*b02;
  const double t393 = b01*b31;
  const double t394 = 2*t265;
  const double t395 = 6*t266;
  const double t396 = b35*t220;
  const double t397 = b32*t199;
  const double t398 = b11*b21;
  const double t399 = b11*t222;
  const double t400 = b22*t186;
  const double t401 = 3*b12;
  const double t402 = b11*b31;
  const double t403 = b32*t186;
  const double t404 = b21*t222;
  const double t405 = b31*t222;
  const double t406 = 2*b11;
  const double t407 = 2*b12;
  const double t408 = 2*b01;
  const double t409 = 2*b02;
  const double t410 = 3*t170;
  const double t411 = 3*t182;
  const double t412 = b03*t197;
  const double t413 = b03*t199;
  const double t414 = b06*t317;
  const double t415 = b07*t197;
  const double t416 = b08*t199;
  const double t417 = b06*t198;
  const double t418 = b06*t200;
  const double t419 = b13*t184;
  const double t420 = b13*t186;
  const double t421 = b16*t315;
  const double t422 = b17*t184;
  const double t423 = b18*t186;
  const double t424 = b16*t185;
  const double t425 = b16*t187;
  const double t426 = 6*t195;
  const double t427 = b03*t184;
  const double t428 = b03*t186;
  const double t429 = b03*t316;
  const double t430 = b13*t197;
  const double t431 = b04*t185;
  const double t432 = b13*t199;
  const double t433 = b05*t187;
  const double t434 = b06*t315;
  const double t435 = b06*t185;
  const double t436 = b06*t187;
  const double t437 = b07*t184;
  const double t438 = b16*t198;
  const double t439 = b07*t185;
  const double t440 = b08*t186;
  const double t441 = b16*t200;
  const double t442 = b08*t187;
  const double t443 = b23*t197;
  const double t444 = b26*t197;
  const double t445 = b23*t199;
  const double t446 = b26*t199;
  const double t447 = b23*t318;
  const double t448 = b06*t219;
  const double t449 = b06*t220;
  const double t450 = b23*t198;
  const double t451 = b24*t198;
  const double t452 = b23*t200;
  const double t453 = b25*t200;
  const double t454 = 3*b03;
  const double t455 = 6*t267;
  const double t456 = b33*t197;
  const double t457 = b36*t197;
  const double t458 = b33*t199;
  const double t459 = b36*t199;
  const double t460 = b33*t318;
  const double t461 = b34*t222;
  const double t462 = b35*t223;
  const double t463 = b34*t198;
  const double t464 = b33*t198;
  const double t465 = b35*t200;
  const double t466 = b33*t200;
  const double t467 = b37*t226;
  const double t468 = b38*t227;
  const double t469 = b23*t184;
  const double t470 = b26*t184;
  const double t471 = b23*t186;
  const double t472 = b26*t186;
  const double t473 = b23*t316;
  const double t474 = b16*t219;
  const double t475 = b16*t220;
  const double t476 = b23*t185;
  const double t477 = b24*t185;
  const double t478 = b23*t187;
  const double t479 = b25*t187;
  const double t480 = 3*b13;
  const double t481 = b33*t184;
  const double t482 = b36*t184;
  const double t483 = b33*t186;
  const double t484 = b36*t186;
  const double t485 = b33*t316;
  const double t486 = b34*t185;
  const double t487 = b33*t185;
  const double t488 = b35*t187;
  const double t489 = b33*t187;
  const double t490 = b26*t219;
  const double t491 = b26*t220;
  const double t492 = b36*t219;
  const double t493 = b36*t220;
  const double t494 = 3*t176;
  const double t495 = b15*t184;
  const double t496 = 3*t188;
  const double t497 = b03*b06;
  const double t498 = b05*t197;
  const double t499 = b08*t198;
  const double t500 = b13*b16;
  const double t501 = b18*t185;
  const double t502 = b03*b16;
  const double t503 = 6*b04*b14;
  const double t504 = b04*t186;
  const double t505 = b05*t184;
  const double t506 = b06*b13;
  const double t507 = b08*t185;
  const double t508 = b03*b23;
  const double t509 = b03*b26;
  const double t510 = b24*t199;
  const double t511 = b27*t199;
  const double t512 = b06*b23;
  const double t513 = b25*t198;
  const double t514 = b24*t200;
  const double t515 = 3*b04;
  const double t516 = b03*b33;
  const double t517 = b03*b36;
  const double t518 = b24*b34;
  const double t519 = 6*t518;
  const double t520 = b25*b35;
  const double t521 = b34*t199;
  const double t522 = b37*t199;
  const double t523 = b06*t226;
  const double t524 = b06*b33;
  const double t525 = b35*t198;
  const double t526 = b34*t200;
  const double t527 = b13*b23;
  const double t528 = b13*b26;
  const double t529 = b24*t186;
  const double t530 = b27*t186;
  const double t531 = b16*b23;
  const double t532 = b25*t185;
  const double t533 = b24*t187;
  const double t534 = 3*b14;
  const double t535 = b13*b33;
  const double t536 = b13*b36;
  const double t537 = b34*t186;
  const double t538 = b37*t186;
  const double t539 = b16*t226;
  const double t540 = b16*b33;
  const double t541 = b35*t185;
  const double t542 = b34*t187;
  const double t543 = b23*b26;
  const double t544 = b27*t220;
  const double t545 = b23*b36;
  const double t546 = b37*t220;
  const double t547 = b26*b33;
  const double t548 = b35*t222;
  const double t549 = b33*b36;
  const double t550 = 3*t177;
  const double t551 = 3*t189;
  const double t552 = 6*b05;
  const double t553 = b15*t552;
  const double t554 = b02*b22;
  const double t555 = b24*t197;
  const double t556 = b27*t197;
  const double t557 = 3*b05;
  const double t558 = b02*b32;
  const double t559 = b34*t197;
  const double t560 = b37*t197;
  const double t561 = b06*t227;
  const double t562 = b12*b22;
  const double t563 = b24*t184;
  const double t564 = b27*t184;
  const double t565 = 3*b15;
  const double t566 = b12*b32;
  const double t567 = b34*t184;
  const double t568 = b37*t184;
  const double t569 = b16*t227;
  const double t570 = b27*t219;
  const double t571 = b37*t219;
  const double t572 = 3*t171;
  const double t573 = 3*t183;
  const double t574 = 6*t196;
  const double t575 = b21*t192;
  const double t576 = b22*t192;
  const double t577 = b02*b20;
  const double t578 = b03*t220;
  const double t579 = b26*t198;
  const double t580 = b26*t200;
  const double t581 = 3*b06;
  const double t582 = b31*t192;
  const double t583 = b32*t192;
  const double t584 = b01*t228;
  const double t585 = b02*b30;
  const double t586 = 6*t268;
  const double t587 = b36*t198;
  const double t588 = b36*t200;
  const double t589 = b21*t203;
  const double t590 = b22*t203;
  const double t591 = b12*b20;
  const double t592 = b13*t220;
  const double t593 = b26*t185;
  const double t594 = b26*t187;
  const double t595 = 3*b16;
  const double t596 = b31*t203;
  const double t597 = b32*t203;
  const double t598 = b11*t228;
  const double t599 = b12*b30;
  const double t600 = b36*t185;
  const double t601 = b36*t187;
  const double t602 = b20*b22;
  const double t603 = b23*t220;
  const double t604 = b20*t228;
  const double t605 = b20*b32;
  const double t606 = b22*b30;
  const double t607 = b33*t220;
  const double t608 = b30*t228;
  const double t609 = b30*b32;
  const double t610 = 3*t178;
  const double t611 = 3*t190;
  const double t612 = 6*b07;
  const double t613 = b17*t612;
  const double t614 = b07*t187;
  const double t615 = b01*b22;
  const double t616 = b25*t197;
  const double t617 = b06*b26;
  const double t618 = b27*t200;
  const double t619 = 3*b07;
  const double t620 = b01*b32;
  const double t621 = b35*t197;
  const double t622 = b06*b36;
  const double t623 = b37*t200;
  const double t624 = b11*b22;
  const double t625 = b25*t184;
  const double t626 = b16*b26;
  const double t627 = b27*t187;
  const double t628 = 3*b17;
  const double t629 = b11*b32;
  const double t630 = b35*t184;
  const double t631 = b16*b36;
  const double t632 = b37*t187;
  const double t633 = b21*b22;
  const double t634 = b25*t219;
  const double t635 = b21*b32;
  const double t636 = b22*b31;
  const double t637 = b35*t219;
  const double t638 = b34*t220;
  const double t639 = b31*b32;
  const double t640 = b35*b38;
  const double t641 = 3*t179;
  const double t642 = 3*t191;
  const double t643 = 6*b08;
  const double t644 = b18*t643;
  const double t645 = b25*t199;
  const double t646 = b27*t198;
  const double t647 = 3*b08;
  const double t648 = b28*b35;
  const double t649 = b37*t198;
  const double t650 = b25*t186;
  const double t651 = b27*t185;
  const double t652 = 3*b18;
  const double t653 = b37*t185;

  M(0, 0) = b06*t1 - b06*t5 + b07*t2 - b07*t3 + b08*t0 - b08*t4;
  M(0, 1) = b10*t6 - b10*t9 - b11*t10 + b11*t7 - b12*t11 + b12*t8;
  M(0, 2) = b00*t12 - b00*t18 + b01*t13 - b01*t19 + b02*t14 - b02*t20 + b06*t17 - b06*t22 + b07*t15 - b07*t23 + b08*t16 - b08*t21 + b16*t1 - b16*t5 + b17*t2 - b17*t3 + b18*t0 - b18*t4;
  M(0, 3) = b00*t6 - b00*t9 - b01*t10 + b01*t7 - b02*t11 + b02*t8 + b10*t12 - b10*t18 + b11*t13 - b11*t19 + b12*t14 - b12*t20 + b16*t17 - b16*t22 + b17*t15 - b17*t23 + b18*t16 - b18*t21;
  M(0, 4) = b20*t28 - b20*t35 + b21*t29 - b21*t33 + b22*t27 - b22*t34 + b23*t26 - b23*t31 + b24*t24 - b24*t32 + b25*t25 - b25*t30 + b26*t1 - b26*t5 + b27*t2 - b27*t3 + b28*t0 - b28*t4;
  M(0, 5) = b30*t28 - b30*t35 + b31*t29 - b31*t33 + b32*t27 - b32*t34 + b33*t26 - b33*t31 + b34*t24 - b34*t32 + b35*t25 - b35*t30 + b36*t1 - b36*t5 + b37*t2 - b37*t3 + b38*t0 - b38*t4;
  M(0, 6) = b20*t6 - b20*t9 - b21*t10 + b21*t7 - b22*t11 + b22*t8 + b23*t41 - b23*t45 + b24*t37 - b24*t47 + b25*t39 - b25*t43 + b26*t38 - b26*t46 + b27*t40 - b27*t42 + b28*t36 - b28*t44;
  M(0, 7) = b30*t6 - b30*t9 - b31*t10 + b31*t7 - b32*t11 + b32*t8 + b33*t41 - b33*t45 + b34*t37 - b34*t47 + b35*t39 - b35*t43 + b36*t38 - b36*t46 + b37*t40 - b37*t42 + b38*t36 - b38*t44;
  M(0, 8) = b20*t12 - b20*t18 + b20*t55 - b20*t68 + b21*t13 - b21*t19 + b21*t56 - b21*t66 + b22*t14 - b22*t20 + b22*t54 - b22*t67 + b23*t53 + b23*t58 - b23*t63 - b23*t71 + b24*t49 + b24*t59 - b24*t65 - b24*t69 + b25*t51 + b25*t57 - b25*t61 - b25*t70 + b26*t17 - b26*t22 + b26*t50 - b26*t64 + b27*t15 - b27*t23 + b27*t52 - b27*t60 + b28*t16 - b28*t21 + b28*t48 - b28*t62;
  M(0, 9) = b30*t12 - b30*t18 + b30*t55 - b30*t68 + b31*t13 - b31*t19 + b31*t56 - b31*t66 + b32*t14 - b32*t20 + b32*t54 - b32*t67 + b33*t53 + b33*t58 - b33*t63 - b33*t71 + b34*t49 + b34*t59 - b34*t65 - b34*t69 + b35*t51 + b35*t57 - b35*t61 - b35*t70 + b36*t17 - b36*t22 + b36*t50 - b36*t64 + b37*t15 - b37*t23 + b37*t52 - b37*t60 + b38*t16 - b38*t21 + b38*t48 - b38*t62;
  M(0, 10) = b23*t79 - b23*t89 + b24*t80 - b24*t87 + b25*t78 - b25*t88 + b26*t73 + b26*t77 - b26*t83 - b26*t85 + b27*t74 + b27*t75 - b27*t81 - b27*t86 + b28*t72 + b28*t76 - b28*t82 - b28*t84;
  M(0, 11) = -b23*t107 + b23*t97 - b24*t105 + b24*t98 - b25*t106 + b25*t96 - b26*t101 - b26*t103 + b26*t91 + b26*t95 - b27*t104 + b27*t92 + b27*t93 - b27*t99 - b28*t100 - b28*t102 + b28*t90 + b28*t94 + b33*t79 - b33*t89 + b34*t80 - b34*t87 + b35*t78 - b35*t88 + b36*t73 + b36*t77 - b36*t83 - b36*t85 + b37*t74 + b37*t75 - b37*t81 - b37*t86 + b38*t72 + b38*t76 - b38*t82 - b38*t84;
  M(0, 12) = -b33*t107 + b33*t97 - b34*t105 + b34*t98 - b35*t106 + b35*t96 - b36*t101 - b36*t103 + b36*t91 + b36*t95 - b37*t104 + b37*t92 + b37*t93 - b37*t99 - b38*t100 - b38*t102 + b38*t90 + b38*t94;
  M(0, 13) = b23*t115 - b23*t125 + b24*t116 - b24*t123 + b25*t114 - b25*t124 + b26*t109 + b26*t113 - b26*t119 - b26*t121 + b27*t110 + b27*t111 - b27*t117 - b27*t122 + b28*t108 + b28*t112 - b28*t118 - b28*t120;
  M(0, 14) = b23*t133 - b23*t143 + b24*t134 - b24*t141 + b25*t132 - b25*t142 + b26*t127 + b26*t131 - b26*t137 - b26*t139 + b27*t128 + b27*t129 - b27*t135 - b27*t140 + b28*t126 + b28*t130 - b28*t136 - b28*t138 + b33*t115 - b33*t125 + b34*t116 - b34*t123 + b35*t114 - b35*t124 + b36*t109 + b36*t113 - b36*t119 - b36*t121 + b37*t110 + b37*t111 - b37*t117 - b37*t122 + b38*t108 + b38*t112 - b38*t118 - b38*t120;
  M(0, 15) = b33*t133 - b33*t143 + b34*t134 - b34*t141 + b35*t132 - b35*t142 + b36*t127 + b36*t131 - b36*t137 - b36*t139 + b37*t128 + b37*t129 - b37*t135 - b37*t140 + b38*t126 + b38*t130 - b38*t136 - b38*t138;
  M(0, 16) = b26*t145 - b26*t149 + b27*t146 - b27*t147 + b28*t144 - b28*t148;
  M(0, 17) = b26*t151 + b26*t155 - b26*t158 - b26*t160 + b27*t152 + b27*t153 - b27*t156 - b27*t161 + b28*t150 + b28*t154 - b28*t157 - b28*t159 + b36*t145 - b36*t149 + b37*t146 - b37*t147 + b38*t144 - b38*t148;
  M(0, 18) = b26*t162 - b26*t165 + b27*t163 - b27*t166 + b28*t164 - b28*t167 + b36*t151 + b36*t155 - b36*t158 - b36*t160 + b37*t152 + b37*t153 - b37*t156 - b37*t161 + b38*t150 + b38*t154 - b38*t157 - b38*t159;
  M(0, 19) = b36*t162 - b36*t165 + b37*t163 - b37*t166 + b38*t164 - b38*t167;
  M(1, 0) = b00*t168 + b00*t169 + b00*t170 + b00*t171 - b00*t176 - b00*t177 - b00*t178 - b00*t179 + b00*b00*b00 + b04*t172 + b05*t174 + b07*t173 + b08*t175;
  M(1, 1) = b10*t180 + b10*t181 + b10*t182 + b10*t183 - b10*t188 - b10*t189 - b10*t190 - b10*t191 + b10*b10*b10 + t184*t44 + t185*t39 + t186*t40 + t187*t47;
  M(1, 2) = b10*t168 + b10*t169 + b10*t170 + b10*t171 - b10*t176 - b10*t177 - b10*t178 - b10*t179 + b10*t202 + b14*t172 + b15*t174 + b17*t173 + b18*t175 - t0*t184 + t15*t199 - t185*t30 - t186*t3 - t187*t24 + t192*t193 + t192*t194 + t192*t195 + t192*t196 + t197*t21 + t197*t62 + t198*t51 + t198*t57 + t199*t52 + t200*t65 + t200*t69;
  M(1, 3) = b00*t180 + b00*t181 + b00*t182 + b00*t183 - b00*t188 - b00*t189 - b00*t190 - b00*t191 + b00*t205 + t15*t186 - t16*t184 + t184*t21 + t184*t62 + t185*t51 + t185*t57 - t186*t23 + t186*t52 + t187*t65 + t187*t69 + t193*t203 + t194*t203 + t195*t203 + t196*t203 + t197*t44 + t198*t39 - t198*t43 + t199*t40 - t200*t37 + t200*t47;
  M(1, 4) = b20*t168 + b20*t169 + b20*t170 + b20*t171 - b20*t176 - b20*t177 - b20*t178 - b20*t179 + b20*t202 + b21*t206 + b22*t207 + b23*t208 + b24*t172 - b24*t209 + b25*t174 - b25*t210 + b26*t211 + b26*t214 + b26*t215 + b27*t173 - b27*t212 + b28*t175 - b28*t213 + t197*t82 + t197*t84 + t198*t78 + t199*t74 + t199*t75 + t200*t87;
  M(1, 5) = b30*t168 + b30*t169 + b30*t170 + b30*t171 - b30*t176 - b30*t177 - b30*t178 - b30*t179 + b30*t202 + b31*t206 + b32*t207 + b33*t208 + b34*t172 - b34*t209 + b35*t174 - b35*t210 + b36*t211 + b36*t214 + b36*t215 + b37*t173 - b37*t212 + b38*t175 - b38*t213 + t100*t197 + t102*t197 + t105*t200 + t198*t96 + t199*t92 + t199*t93;
  M(1, 6) = b20*t180 + b20*t181 + b20*t182 + b20*t183 - b20*t188 - b20*t189 - b20*t190 - b20*t191 + b20*t205 + b21*t216 + b22*t217 + b23*t218 + b26*t221 + b26*t224 + b26*t225 + t110*t186 + t111*t186 + t114*t185 + t118*t184 + t120*t184 + t123*t187 - t219*t36 + t219*t44 + t220*t40 - t220*t42 + t222*t39 - t222*t43 - t223*t37 + t223*t47;
  M(1, 7) = b30*t180 + b30*t181 + b30*t182 + b30*t183 - b30*t188 - b30*t189 - b30*t190 - b30*t191 + b30*t205 + b31*t216 + b32*t217 + b33*t218 + b36*t221 + b36*t224 + b36*t225 + t128*t186 + t129*t186 + t132*t185 + t136*t184 + t138*t184 + t141*t187 - t226*t36 + t226*t44 + t227*t40 - t227*t42 + t228*t39 - t228*t43 - t229*t37 + t229*t47;
  M(1, 8) = b20*t230 + b21*t231 + b21*t235 + b22*t232 + b22*t238 + b23*t233 + b23*t240 + b26*t234 + b26*t237 + b26*t239 + b26*t241 + b26*t242 + b26*t243 + t110*t199 + t111*t199 + t114*t198 + t118*t197 + t120*t197 + t123*t200 + t15*t220 - t16*t219 - t184*t76 + t184*t82 + t184*t84 + t185*t78 - t185*t88 + t186*t74 + t186*t75 - t186*t86 - t187*t80 + t187*t87 + t193*t236 + t194*t236 + t195*t236 + t196*t236 + t21*t219 - t219*t48 + t219*t62 - t220*t23 + t220*t52 - t220*t60 + t222*t51 + t222*t57 - t222*t61 - t222*t70 - t223*t49 - t223*t59 + t223*t65 + t223*t69;
  M(1, 9) = b30*t230 + b31*t231 + b31*t235 + b32*t232 + b32*t238 + b33*t233 + b33*t240 + b36*t234 + b36*t237 + b36*t239 + b36*t241 + b36*t242 + b36*t243 + t100*t184 + t102*t184 - t104*t186 + t105*t187 - t106*t185 + t128*t199 + t129*t199 + t132*t198 + t136*t197 + t138*t197 + t141*t200 + t15*t227 - t16*t226 - t184*t94 + t185*t96 + t186*t92 + t186*t93 - t187*t98 + t193*t244 + t194*t244 + t195*t244 + t196*t244 + t21*t226 - t226*t48 + t226*t62 - t227*t23 + t227*t52 - t227*t60 + t228*t51 + t228*t57 - t228*t61 - t228*t70 - t229*t49 - t229*t59 + t229*t65 + t229*t69;
  M(1, 10) = b00*t245 + b00*t246 + b00*t247 + b00*t248 - b00*t259 - b00*t260 - b00*t261 - b00*t262 + b21*t249 + b22*t251 + b23*t253 + b26*t254 + b26*t255 + b26*t256 + t146*t199 + t148*t197 - t219*t76 + t219*t82 + t219*t84 + t220*t74 + t220*t75 - t220*t86 + t222*t250 + t222*t78 - t222*t88 + t223*t252 - t223*t80 + t223*t87 + t257*t258;
  M(1, 11) = b00*t264 + b21*t271 + b22*t273 + b23*t275 + b26*t276 + b26*t277 + b26*t278 + b31*t249 + b32*t251 + b33*t253 + b36*t254 + b36*t255 + b36*t256 + t100*t219 + t102*t219 - t104*t220 + t105*t223 - t106*t222 + t152*t199 + t153*t199 + t157*t197 + t159*t197 + t192*t265 + t192*t266 + t192*t267 + t192*t268 - t192*t269 - t192*t270 - t219*t94 + t220*t92 + t220*t93 + t222*t272 + t222*t96 + t223*t274 - t223*t98 - t226*t72 - t226*t76 + t226*t82 + t226*t84 + t227*t74 + t227*t75 - t227*t81 - t227*t86 + t228*t250 + t228*t78 - t228*t88 + t229*t252 - t229*t80 + t229*t87;
  M(1, 12) = b00*t279 + b00*t280 + b00*t281 + b00*t282 - b00*t284 - b00*t285 - b00*t286 - b00*t287 + b31*t271 + b32*t273 + b33*t275 + b36*t276 + b36*t277 + b36*t278 + t100*t226 + t102*t226 - t104*t227 + t105*t229 - t106*t228 + t163*t199 + t167*t197 - t226*t94 + t227*t92 + t227*t93 + t228*t272 + t228*t96 + t229*t274 - t229*t98 + t258*t283;
  M(1, 13) = b10*t245 + b10*t246 + b10*t247 + b10*t248 - b10*t259 - b10*t260 - b10*t261 - b10*t262 + b21*t288 + b22*t290 + b23*t292 + b26*t293 + b26*t294 + b26*t295 + t110*t220 + t111*t220 - t112*t219 + t114*t222 - t116*t223 + t118*t219 + t120*t219 - t122*t220 + t123*t223 - t124*t222 + t146*t186 + t148*t184 + t222*t289 + t223*t291 + t257*t296;
  M(1, 14) = b10*t264 + b21*t297 + b22*t299 + b23*t301 + b26*t302 + b26*t303 + b26*t304 + b31*t288 + b32*t290 + b33*t292 + b36*t293 + b36*t294 + b36*t295 - t108*t226 + t110*t227 + t111*t227 - t112*t226 + t114*t228 - t116*t229 - t117*t227 + t118*t226 + t120*t226 - t122*t227 + t123*t229 - t124*t228 + t128*t220 + t129*t220 - t130*t219 + t132*t222 - t134*t223 + t136*t219 + t138*t219 - t140*t220 + t141*t223 - t142*t222 + t152*t186 + t153*t186 + t157*t184 + t159*t184 + t203*t265 + t203*t266 + t203*t267 + t203*t268 - t203*t269 - t203*t270 + t222*t298 + t223*t300 + t228*t289 + t229*t291;
  M(1, 15) = b10*t279 + b10*t280 + b10*t281 + b10*t282 - b10*t284 - b10*t285 - b10*t286 - b10*t287 + b31*t297 + b32*t299 + b33*t301 + b36*t302 + b36*t303 + b36*t304 + t128*t227 + t129*t227 - t130*t226 + t132*t228 - t134*t229 + t136*t226 + t138*t226 - t140*t227 + t141*t229 - t142*t228 + t163*t186 + t167*t184 + t228*t298 + t229*t300 + t283*t296;
  M(1, 16) = b20*t245 + b20*t246 + b20*t247 + b20*t248 - b20*t259 - b20*t260 - b20*t261 - b20*t262 + b20*b20*b20 + t146*t220 + t148*t219 + t222*t305 + t223*t306;
  M(1, 17) = -b20*t307 - b20*t308 + b30*t245 + b30*t246 + b30*t247 + b30*t248 + 3*b30*t257 - b30*t259 - b30*t260 - b30*t261 - b30*t262 - t144*t226 + t146*t227 - t147*t227 + t148*t226 + t152*t220 + t153*t220 + t157*t219 + t159*t219 + t222*t309 + t222*t311 + t223*t310 + t223*t312 + t228*t305 + t229*t306 + t236*t265 + t236*t266 + t236*t267 + t236*t268;
  M(1, 18) = b20*t279 + b20*t280 + b20*t281 + b20*t282 + 3*b20*t283 - b20*t284 - b20*t285 - b20*t286 - b20*t287 - b30*t307 - b30*t308 + t152*t227 + t153*t227 - t154*t226 + t157*t226 + t159*t226 - t161*t227 + t163*t220 + t167*t219 + t222*t313 + t223*t314 + t228*t309 + t228*t311 + t229*t310 + t229*t312 + t244*t265 + t244*t266 + t244*t267 + t244*t268;
  M(1, 19) = b30*t279 + b30*t280 + b30*t281 + b30*t282 - b30*t284 - b30*t285 - b30*t286 - b30*t287 + b30*b30*b30 + t163*t227 + t167*t226 + t228*t313 + t229*t314;
  M(2, 0) = b01*t169 - b01*t170 - b01*t171 + b01*t176 - b01*t177 + b01*t178 - b01*t179 + b01*t201 + b01*b01*b01 + b03*t209 + b06*t212 + t199*t5 + t200*t26;
  M(2, 1) = b11*t181 - b11*t182 - b11*t183 + b11*t188 - b11*t189 + b11*t190 - b11*t191 + b11*t204 + b11*b11*b11 + t186*t46 + t187*t41 + t315*t36 + t316*t43;
  M(2, 2) = b01*t319 + b01*t320 + b07*t237 + b10*t206 + b11*t169 - b11*t170 - b11*t171 + b11*t176 - b11*t177 + b11*t178 - b11*t179 + b11*t201 + b11*t321 - b13*t172 + b13*t209 - b16*t173 + b16*t212 - t1*t186 + t16*t317 + t186*t5 + t187*t26 - t187*t31 + t199*t22 + t199*t64 + t200*t53 + t200*t58 + t317*t48 + t318*t61 + t318*t70;
  M(2, 3) = b01*t181 - b01*t182 - b01*t183 + b01*t188 - b01*t189 + b01*t190 - b01*t191 + b01*t204 + b01*t322 + b07*t224 + b10*t231 + b11*t319 + b11*t320 + t16*t315 - t17*t186 + t186*t22 + t186*t64 + t187*t53 + t187*t58 + t199*t46 + t200*t41 - t200*t45 - t21*t315 + t315*t48 + t316*t61 + t316*t70 + t317*t36 - t318*t39 + t318*t43;
  M(2, 4) = b20*t206 + b21*t169 - b21*t170 - b21*t171 + b21*t176 - b21*t177 + b21*t178 - b21*t179 + b21*t201 + b21*t321 - b23*t172 + b23*t209 + b24*t325 - b26*t173 + b26*t212 + b27*t211 + b27*t214 + b27*t215 - t1*t220 + t199*t83 + t199*t85 + t200*t79 + t220*t5 + t223*t26 - t223*t31 + t317*t72 + t317*t76 + t318*t88 + t323*t324;
  M(2, 5) = b30*t206 + b31*t169 - b31*t170 - b31*t171 + b31*t176 - b31*t177 + b31*t178 - b31*t179 + b31*t201 + b31*t321 - b33*t172 + b33*t209 + b34*t325 - b36*t173 + b36*t212 + b37*t211 + b37*t214 + b37*t215 - t1*t227 + t101*t199 + t103*t199 + t106*t318 + t200*t97 + t227*t5 + t229*t26 - t229*t31 + t317*t90 + t317*t94 + t324*t326;
  M(2, 6) = b20*t216 + b21*t181 - b21*t182 - b21*t183 + b21*t188 - b21*t189 + b21*t190 - b21*t191 + b21*t204 + b21*t322 + b24*t330 + b27*t221 + b27*t224 + b27*t225 + t108*t315 + t112*t315 + t115*t187 + t119*t186 + t121*t186 + t124*t316 - t220*t38 + t220*t46 + t223*t41 - t223*t45 + t323*t329 + t327*t36 - t327*t44 - t328*t39 + t328*t43;
  M(2, 7) = b30*t216 + b31*t181 - b31*t182 - b31*t183 + b31*t188 - b31*t189 + b31*t190 - b31*t191 + b31*t204 + b31*t322 + b34*t330 + b37*t221 + b37*t224 + b37*t225 + t126*t315 + t130*t315 + t133*t187 + t137*t186 + t139*t186 + t142*t316 - t227*t38 + t227*t46 + t229*t41 - t229*t45 + t326*t329 + t331*t36 - t331*t44 - t332*t39 + t332*t43;
  M(2, 8) = b07*t294 + b20*t231 + b20*t235 + b21*t319 + b21*t320 + b21*t333 + b21*t334 + b24*t336 + b24*t338 + b27*t234 + b27*t237 + b27*t239 + b27*t241 + b27*t242 + b27*t243 + t108*t317 + t112*t317 + t115*t200 + t119*t199 + t121*t199 + t124*t318 + t16*t327 - t17*t220 - t186*t77 + t186*t83 + t186*t85 + t187*t79 - t187*t89 - t21*t327 + t22*t220 - t220*t50 + t220*t64 + t223*t53 + t223*t58 - t223*t63 - t223*t71 + t315*t72 + t315*t76 - t315*t84 - t316*t78 + t316*t88 + t323*t335 + t323*t337 + t327*t48 - t327*t62 - t328*t51 - t328*t57 + t328*t61 + t328*t70;
  M(2, 9) = b07*t303 + b30*t231 + b30*t235 + b31*t319 + b31*t320 + b31*t333 + b31*t334 + b34*t336 + b34*t338 + b37*t234 + b37*t237 + b37*t239 + b37*t241 + b37*t242 + b37*t243 + t101*t186 - t102*t315 + t103*t186 + t106*t316 - t107*t187 + t126*t317 + t130*t317 + t133*t200 + t137*t199 + t139*t199 + t142*t318 + t16*t331 - t17*t227 - t186*t95 + t187*t97 - t21*t331 + t22*t227 - t227*t50 + t227*t64 + t229*t53 + t229*t58 - t229*t63 - t229*t71 + t315*t90 + t315*t94 - t316*t96 + t326*t335 + t326*t337 + t331*t48 - t331*t62 - t332*t51 - t332*t57 + t332*t61 + t332*t70;
  M(2, 10) = b01*t246 - b01*t247 - b01*t248 + b01*t257 + b01*t259 - b01*t260 + b01*t261 - b01*t262 + b21*t339 + b24*t343 + b27*t255 + b27*t256 + b27*t340 + b28*t342 + t144*t317 + t149*t199 - t220*t77 + t220*t83 + t220*t85 + t222*t344 + t223*t79 - t223*t89 + t245*t345 + t323*t341 + t327*t72 + t327*t76 - t327*t84 - t328*t78 + t328*t88;
  M(2, 11) = b01*t307 - b01*t308 + b01*t348 + b01*t349 + b01*t350 + b02*t352 + b21*t346 + b24*t353 + b27*t277 + b27*t278 + b27*t347 + b30*t249 + b31*t339 + b34*t343 + b37*t255 + b37*t256 + b37*t340 + b38*t342 + t101*t220 - t102*t327 + t103*t220 + t106*t328 - t107*t223 + t150*t317 + t154*t317 + t158*t199 + t160*t199 - t220*t95 + t222*t354 + t223*t97 - t227*t73 - t227*t77 + t227*t83 + t227*t85 + t228*t344 + t229*t79 - t229*t89 - t250*t332 + t323*t351 + t326*t341 + t327*t90 + t327*t94 - t328*t96 + t331*t72 + t331*t76 - t331*t82 - t331*t84 - t332*t78 + t332*t88;
  M(2, 12) = b01*t280 - b01*t281 - b01*t282 + b01*t283 + b01*t284 - b01*t285 + b01*t286 - b01*t287 + b02*t355 + b31*t346 + b34*t353 + b37*t277 + b37*t278 + b37*t347 + t101*t227 - t102*t331 + t103*t227 + t106*t332 - t107*t229 + t164*t317 + t165*t199 - t227*t95 + t228*t354 + t229*t97 + t279*t345 + t326*t351 + t331*t90 + t331*t94 - t332*t96;
  M(2, 13) = b11*t246 - b11*t247 - b11*t248 + b11*t257 + b11*t259 - b11*t260 + b11*t261 - b11*t262 + b21*t356 + b24*t360 + b27*t294 + b27*t295 + b27*t357 + b28*t359 + t108*t327 + t112*t327 - t113*t220 - t114*t328 + t115*t223 + t119*t220 - t120*t327 + t121*t220 + t124*t328 - t125*t223 + t144*t315 + t149*t186 + t222*t361 + t245*t362 + t323*t358;
  M(2, 14) = b11*t307 - b11*t308 + b11*t348 + b11*t349 + b11*t350 - b11*t365 + b12*t352 + b21*t363 + b24*t367 + b27*t303 + b27*t304 + b27*t364 + b30*t288 + b31*t356 + b34*t360 + b37*t294 + b37*t295 + b37*t357 + b38*t359 + t108*t331 - t109*t227 + t112*t331 - t113*t227 - t114*t332 + t115*t229 - t118*t331 + t119*t227 - t120*t331 + t121*t227 + t124*t332 - t125*t229 + t126*t327 + t130*t327 - t131*t220 - t132*t328 + t133*t223 + t137*t220 - t138*t327 + t139*t220 + t142*t328 - t143*t223 + t150*t315 + t154*t315 + t158*t186 + t160*t186 + t222*t368 + t228*t361 + t323*t366 + t326*t358;
  M(2, 15) = b11*t280 - b11*t281 - b11*t282 + b11*t283 + b11*t284 - b11*t285 + b11*t286 - b11*t287 + b12*t355 + b31*t363 + b34*t367 + b37*t303 + b37*t304 + b37*t364 + t126*t331 + t130*t331 - t131*t227 - t132*t332 + t133*t229 + t137*t227 - t138*t331 + t139*t227 + t142*t332 - t143*t229 + t164*t315 + t165*t186 + t228*t368 + t279*t362 + t326*t366;
  M(2, 16) = b21*t246 - b21*t247 - b21*t248 + b21*t257 + b21*t259 - b21*t260 + b21*t261 - b21*t262 + b21*b21*b21 + b28*t370 + t144*t327 + t149*t220 + t222*t369;
  M(2, 17) = b21*t307 - b21*t308 + b21*t349 + b21*t350 - b21*t365 + b21*t371 + b22*t352 + b28*t374 + 3*b31*t245 + b31*t246 - b31*t247 - b31*t248 + b31*t257 + b31*t259 - b31*t260 + b31*t261 - b31*t262 + b38*t370 + t144*t331 - t145*t227 - t148*t331 + t149*t227 + t150*t327 + t154*t327 + t158*t220 + t160*t220 + t222*t372 + t222*t373 + t228*t369;
  M(2, 18) = 3*b21*t279 + b21*t280 - b21*t281 - b21*t282 + b21*t283 + b21*t284 - b21*t285 + b21*t286 - b21*t287 + b22*t355 + b31*t307 - b31*t308 + b31*t349 + b31*t350 - b31*t365 + b31*t371 + b32*t352 + b38*t374 + t150*t331 + t154*t331 - t155*t227 + t158*t227 - t159*t331 + t160*t227 + t164*t327 + t165*t220 + t222*t375 + t228*t372 + t228*t373;
  M(2, 19) = b31*t280 - b31*t281 - b31*t282 + b31*t283 + b31*t284 - b31*t285 + b31*t286 - b31*t287 + b31*b31*b31 + b32*t355 + t164*t331 + t165*t227 + t228*t375;
  M(3, 0) = b02*t168 - b02*t170 - b02*t171 - b02*t176 + b02*t177 - b02*t178 + b02*t179 + b02*t201 + b02*b02*b02 + b03*t210 + b06*t213 + t1*t197 + t198*t31;
  M(3, 1) = b12*t180 - b12*t182 - b12*t183 - b12*t188 + b12*t189 - b12*t190 + b12*t191 + b12*t204 + b12*b12*b12 + t184*t38 + t185*t45 + t315*t42 + t316*t37;
  M(3, 2) = b02*t376 + b02*t377 + b08*t239 + b10*t207 + b12*t168 - b12*t170 - b12*t171 - b12*t176 + b12*t177 - b12*t178 + b12*t179 + b12*t201 + b12*t378 - b13*t174 + b13*t210 - b16*t175 + b16*t213 + t1*t184 + t17*t197 - t184*t5 - t185*t26 + t185*t31 + t197*t50 + t198*t63 + t198*t71 + t23*t317 + t317*t60 + t318*t49 + t318*t59;
  M(3, 3) = b02*t180 - b02*t182 - b02*t183 - b02*t188 + b02*t189 - b02*t190 + b02*t191 + b02*t204 + b02*t379 + b08*t225 + b10*t232 + b12*t376 + b12*t377 - t15*t315 + t17*t184 - t184*t22 + t184*t50 + t185*t63 + t185*t71 + t197*t38 - t198*t41 + t198*t45 + t23*t315 + t315*t60 + t316*t49 + t316*t59 + t317*t42 + t318*t37 - t318*t47;
  M(3, 4) = b20*t207 + b21*t380 + b22*t168 - b22*t170 - b22*t171 - b22*t176 + b22*t177 - b22*t178 + b22*t179 + b22*t201 + b22*t378 - b23*t174 + b23*t210 + b25*t381 - b26*t175 + b26*t213 + b28*t211 + b28*t214 + b28*t215 + t1*t219 + t197*t73 + t197*t77 + t198*t89 - t219*t5 - t222*t26 + t222*t31 + t317*t81 + t317*t86 + t318*t80;
  M(3, 5) = b30*t207 + b31*t380 + b32*t168 - b32*t170 - b32*t171 - b32*t176 + b32*t177 - b32*t178 + b32*t179 + b32*t201 + b32*t378 - b33*t174 + b33*t210 + b35*t381 - b36*t175 + b36*t213 + b38*t211 + b38*t214 + b38*t215 + t1*t226 + t104*t317 + t107*t198 + t197*t91 + t197*t95 - t226*t5 - t228*t26 + t228*t31 + t317*t99 + t318*t98;
  M(3, 6) = b20*t217 + b21*t382 + b22*t180 - b22*t182 - b22*t183 - b22*t188 + b22*t189 - b22*t190 + b22*t191 + b22*t204 + b22*t379 + b25*t383 + b28*t221 + b28*t224 + b28*t225 + t109*t184 + t113*t184 + t116*t316 + t117*t315 + t122*t315 + t125*t185 + t219*t38 - t219*t46 - t222*t41 + t222*t45 - t327*t40 + t327*t42 + t328*t37 - t328*t47;
  M(3, 7) = b30*t217 + b31*t382 + b32*t180 - b32*t182 - b32*t183 - b32*t188 + b32*t189 - b32*t190 + b32*t191 + b32*t204 + b32*t379 + b35*t383 + b38*t221 + b38*t224 + b38*t225 + t127*t184 + t131*t184 + t134*t316 + t135*t315 + t140*t315 + t143*t185 + t226*t38 - t226*t46 - t228*t41 + t228*t45 - t331*t40 + t331*t42 + t332*t37 - t332*t47;
  M(3, 8) = b08*t295 + b20*t232 + b20*t238 + b22*t333 + b22*t377 + b22*t385 + b25*t386 + b25*t387 + b28*t234 + b28*t237 + b28*t239 + b28*t241 + b28*t242 + b28*t243 + t109*t197 + t113*t197 + t116*t318 + t117*t317 + t122*t317 + t125*t198 - t15*t327 + t17*t219 + t184*t73 + t184*t77 - t184*t85 - t185*t79 + t185*t89 + t193*t323 - t219*t22 + t219*t50 - t219*t64 - t222*t53 - t222*t58 + t222*t63 + t222*t71 + t23*t327 - t315*t75 + t315*t81 + t315*t86 + t316*t80 - t316*t87 - t327*t52 + t327*t60 + t328*t49 + t328*t59 - t328*t65 - t328*t69 + t335*t384 + t337*t384;
  M(3, 9) = b08*t304 + b30*t232 + b30*t238 + b32*t333 + b32*t377 + b32*t385 + b35*t386 + b35*t387 + b38*t234 + b38*t237 + b38*t239 + b38*t241 + b38*t242 + b38*t243 - t103*t184 + t104*t315 - t105*t316 + t107*t185 + t127*t197 + t131*t197 + t134*t318 + t135*t317 + t140*t317 + t143*t198 - t15*t331 + t17*t226 + t184*t91 + t184*t95 - t185*t97 + t193*t326 - t22*t226 + t226*t50 - t226*t64 - t228*t53 - t228*t58 + t228*t63 + t228*t71 + t23*t331 - t315*t93 + t315*t99 + t316*t98 - t331*t52 + t331*t60 + t332*t49 + t332*t59 - t332*t65 - t332*t69 + t335*t388 + t337*t388;
  M(3, 10) = b02*t245 - b02*t247 - b02*t248 + b02*t257 - b02*t259 + b02*t260 - b02*t261 + b02*t262 + b22*t339 + b25*t391 + b28*t255 + b28*t256 + b28*t340 + b28*t390 + t145*t197 + t147*t317 + t219*t73 + t219*t77 - t219*t85 - t222*t79 + t222*t89 + t223*t344 + t246*t392 + t323*t389 - t327*t75 + t327*t81 + t327*t86 + t328*t80 - t328*t87;
  M(3, 11) = b01*t352 - b02*t307 + b02*t308 + b02*t394 + b02*t395 + b02*t396 + b22*t346 + b25*t397 + b28*t277 + b28*t278 + b28*t347 + b30*t251 + b32*t339 + b35*t391 + b38*t255 + b38*t256 + b38*t340 + b38*t390 - t103*t219 + t104*t327 - t105*t328 + t107*t222 + t151*t197 + t155*t197 + t156*t317 + t161*t317 + t219*t91 + t219*t95 - t222*t97 + t223*t354 + t226*t73 + t226*t77 - t226*t83 - t226*t85 - t228*t79 + t228*t89 + t229*t344 - t252*t332 + t323*t393 + t326*t389 - t327*t93 + t327*t99 + t328*t98 - t331*t74 - t331*t75 + t331*t81 + t331*t86 + t332*t80 - t332*t87;
  M(3, 12) = b01*t355 + b02*t279 - b02*t281 - b02*t282 + b02*t283 - b02*t284 + b02*t285 - b02*t286 + b02*t287 + b32*t346 + b35*t397 + b38*t277 + b38*t278 + b38*t347 - t103*t226 + t104*t331 - t105*t332 + t107*t228 + t162*t197 + t166*t317 + t226*t91 + t226*t95 - t228*t97 + t229*t354 + t280*t392 + t326*t393 - t331*t93 + t331*t99 + t332*t98;
  M(3, 13) = b12*t245 - b12*t247 - b12*t248 + b12*t257 - b12*t259 + b12*t260 - b12*t261 + b12*t262 + b22*t356 + b25*t400 + b28*t294 + b28*t295 + b28*t357 + b28*t399 + t109*t219 - t111*t327 + t113*t219 - t115*t222 + t116*t328 + t117*t327 - t121*t219 + t122*t327 - t123*t328 + t125*t222 + t145*t184 + t147*t315 + t223*t361 + t246*t401 + t323*t398;
  M(3, 14) = b11*t352 - b12*t307 + b12*t308 - b12*t365 + b12*t394 + b12*t395 + b12*t396 + b22*t363 + b25*t403 + b28*t303 + b28*t304 + b28*t364 + b30*t290 + b32*t356 + b35*t400 + b38*t294 + b38*t295 + b38*t357 + b38*t399 + t109*t226 - t110*t331 - t111*t331 + t113*t226 - t115*t228 + t116*t332 + t117*t331 - t119*t226 - t121*t226 + t122*t331 - t123*t332 + t125*t228 + t127*t219 - t129*t327 + t131*t219 - t133*t222 + t134*t328 + t135*t327 - t139*t219 + t140*t327 - t141*t328 + t143*t222 + t151*t184 + t155*t184 + t156*t315 + t161*t315 + t223*t368 + t229*t361 + t323*t402 + t326*t398;
  M(3, 15) = b11*t355 + b12*t279 - b12*t281 - b12*t282 + b12*t283 - b12*t284 + b12*t285 - b12*t286 + b12*t287 + b32*t363 + b35*t403 + b38*t303 + b38*t304 + b38*t364 + t127*t226 - t129*t331 + t131*t226 - t133*t228 + t134*t332 + t135*t331 - t139*t226 + t140*t331 - t141*t332 + t143*t228 + t162*t184 + t166*t315 + t229*t368 + t280*t401 + t326*t402;
  M(3, 16) = b22*t245 - b22*t247 - b22*t248 + b22*t257 - b22*t259 + b22*t260 - b22*t261 + b22*t262 + b22*b22*b22 + b28*t404 + t145*t219 + t147*t327 + t223*t369;
  M(3, 17) = b21*t352 - b22*t307 + b22*t308 + b22*t371 + b22*t396 + b28*t405 + b32*t245 + 3*b32*t246 - b32*t247 - b32*t248 + b32*t257 - b32*t259 + b32*t260 - b32*t261 + b32*t262 + b38*t404 + t145*t226 - t146*t331 + t147*t331 - t149*t226 + t151*t219 + t155*t219 + t156*t327 + t161*t327 + t223*t372 + t223*t373 + t229*t369 + t265*t323 - t268*t323;
  M(3, 18) = b21*t355 + b22*t279 + 3*b22*t280 - b22*t281 - b22*t282 + b22*t283 - b22*t284 + b22*t285 - b22*t286 + b22*t287 + b31*t352 - b32*t307 + b32*t308 + b32*t371 + b32*t396 + b38*t405 + t151*t226 - t153*t331 + t155*t226 + t156*t331 - t160*t226 + t161*t331 + t162*t219 + t166*t327 + t223*t375 + t229*t372 + t229*t373 + t265*t326 - t268*t326;
  M(3, 19) = b31*t355 + b32*t279 - b32*t281 - b32*t282 + b32*t283 - b32*t284 + b32*t285 - b32*t286 + b32*t287 + b32*b32*b32 + t162*t226 + t166*t331 + t229*t375;
  M(4, 0) = b01*t209 + b02*t210 - b03*t168 - b03*t169 + b03*t171 + b03*t176 + b03*t177 - b03*t178 - b03*t179 + b03*t201 + b03*b03*b03 + t198*t34 + t200*t29;
  M(4, 1) = -b13*t180 - b13*t181 + b13*t183 + b13*t188 + b13*t189 - b13*t190 - b13*t191 + b13*t204 + b13*b13*b13 + t11*t185 + t187*t7 + t36*t406 + t407*t42;
  M(4, 2) = b03*t320 + b03*t377 + b10*t208 - b11*t172 + b11*t209 - b12*t174 + b12*t210 - b13*t168 - b13*t169 + b13*t171 + b13*t176 + b13*t177 - b13*t178 - b13*t179 + b13*t201 + b13*t410 + t13*t200 + t16*t408 - t185*t27 + t185*t34 + t187*t29 - t187*t33 + t196*t317 + t198*t20 + t198*t67 + t200*t56 + t23*t409 + t408*t48 + t409*t60;
  M(4, 3) = -b03*t180 - b03*t181 + b03*t183 + b03*t188 + b03*t189 - b03*t190 - b03*t191 + b03*t204 + b03*t411 + b10*t233 + b13*t320 + b13*t377 - t10*t200 + t11*t198 + t13*t187 + t16*t406 + t185*t20 + t185*t67 + t187*t56 + t196*t315 - t198*t8 + t200*t7 + t23*t407 + t36*t408 - t40*t409 + t406*t48 + t407*t60 - t408*t44 + t409*t42;
  M(4, 4) = b20*t208 - b21*t172 + b21*t209 - b22*t174 + b22*t210 - b23*t168 - b23*t169 + b23*t171 + b23*t176 + b23*t177 - b23*t178 - b23*t179 + b23*t201 + b23*t410 + b24*t412 + b24*t417 + b25*t413 + b25*t418 + b26*t414 + b26*t415 + b26*t416 - t222*t27 + t222*t34 + t223*t29 - t223*t33 + t408*t72 + t408*t76 + t409*t81 + t409*t86;
  M(4, 5) = b30*t208 - b31*t172 + b31*t209 - b32*t174 + b32*t210 - b33*t168 - b33*t169 + b33*t171 + b33*t176 + b33*t177 - b33*t178 - b33*t179 + b33*t201 + b33*t410 + b34*t412 + b34*t417 + b35*t413 + b35*t418 + b36*t414 + b36*t415 + b36*t416 + t104*t409 - t228*t27 + t228*t34 + t229*t29 - t229*t33 + t408*t90 + t408*t94 + t409*t99;
  M(4, 6) = b20*t218 - b23*t180 - b23*t181 + b23*t183 + b23*t188 + b23*t189 - b23*t190 - b23*t191 + b23*t204 + b23*t411 + b24*t419 + b24*t424 + b25*t420 + b25*t425 + b26*t421 + b26*t422 + b26*t423 - t10*t223 + t108*t406 + t11*t222 + t112*t406 + t117*t407 + t122*t407 - t222*t8 + t223*t7 - t323*t40 + t323*t42 + t36*t384 - t384*t44;
  M(4, 7) = b30*t218 - b33*t180 - b33*t181 + b33*t183 + b33*t188 + b33*t189 - b33*t190 - b33*t191 + b33*t204 + b33*t411 + b34*t419 + b34*t424 + b35*t420 + b35*t425 + b36*t421 + b36*t422 + b36*t423 - t10*t229 + t11*t228 + t126*t406 + t130*t406 + t135*t407 + t140*t407 - t228*t8 + t229*t7 - t326*t40 + t326*t42 + t36*t388 - t388*t44;
  M(4, 8) = b20*t233 + b20*t240 + b23*t320 + b23*t333 + b23*t377 + b23*t426 - b23*t439 - b23*t442 + b24*t427 + b24*t430 + b24*t435 + b24*t438 + b25*t428 + b25*t432 + b25*t436 + b25*t441 + b26*t429 + b26*t431 + b26*t433 + b26*t434 + b26*t437 + b26*t440 + t108*t408 + t112*t408 + t117*t409 + t122*t409 + t13*t223 - t14*t222 - t15*t323 + t16*t384 - t19*t223 + t196*t327 + t20*t222 - t21*t384 - t222*t54 + t222*t67 + t223*t56 - t223*t66 + t23*t323 - t323*t52 + t323*t60 + t384*t48 - t384*t62 + t406*t72 + t406*t76 - t406*t82 - t407*t74 + t407*t81 + t407*t86;
  M(4, 9) = b30*t233 + b30*t240 + b33*t320 + b33*t333 + b33*t377 + b33*t426 - b33*t439 - b33*t442 + b34*t427 + b34*t430 + b34*t435 + b34*t438 + b35*t428 + b35*t432 + b35*t436 + b35*t441 + b36*t429 + b36*t431 + b36*t433 + b36*t434 + b36*t437 + b36*t440 - t100*t406 + t104*t407 + t126*t408 + t13*t229 + t130*t408 + t135*t409 - t14*t228 + t140*t409 - t15*t326 + t16*t388 - t19*t229 + t196*t331 + t20*t228 - t21*t388 - t228*t54 + t228*t67 + t229*t56 - t229*t66 + t23*t326 - t326*t52 + t326*t60 + t388*t48 - t388*t62 + t406*t90 + t406*t94 - t407*t92 + t407*t99;
  M(4, 10) = -b03*t245 - b03*t246 + b03*t248 + b03*t257 + b03*t259 + b03*t260 - b03*t261 - b03*t262 + b23*t339 + b24*t443 + b25*t445 + b26*t447 + b26*t451 + b26*t453 + b27*t444 + b27*t448 - b27*t450 + b28*t446 + b28*t449 - b28*t452 + t144*t408 + t147*t409 + t247*t454 - t323*t74 + t323*t81 + t323*t86 + t384*t72 + t384*t76 - t384*t82;
  M(4, 11) = -b03*t307 - b03*t308 + b03*t350 + b03*t396 + b03*t455 + b06*t461 + b06*t462 + b23*t346 + b24*t456 + b25*t458 + b26*t460 + b26*t463 + b26*t465 + b27*t457 - b27*t464 + b28*t459 - b28*t466 + b30*t253 + b33*t339 + b34*t443 + b35*t445 + b36*t447 + b36*t451 + b36*t453 + b37*t444 + b37*t448 - b37*t450 + b38*t446 + b38*t449 - b38*t452 - t100*t384 + t104*t323 + t150*t408 + t154*t408 + t156*t409 + t161*t409 + t268*t317 - t323*t92 + t323*t99 - t326*t74 - t326*t75 + t326*t81 + t326*t86 + t384*t90 + t384*t94 + t388*t72 + t388*t76 - t388*t82 - t388*t84;
  M(4, 12) = -b03*t279 - b03*t280 + b03*t282 + b03*t283 + b03*t284 + b03*t285 - b03*t286 - b03*t287 + b06*t467 + b06*t468 + b33*t346 + b34*t456 + b35*t458 + b36*t460 + b36*t463 + b36*t465 + b37*t457 - b37*t464 + b38*t459 - b38*t466 - t100*t388 + t104*t326 + t164*t408 + t166*t409 + t281*t454 - t326*t92 + t326*t99 + t388*t90 + t388*t94;
  M(4, 13) = -b13*t245 - b13*t246 + b13*t248 + b13*t257 + b13*t259 + b13*t260 - b13*t261 - b13*t262 + b23*t356 + b24*t469 + b25*t471 + b26*t473 + b26*t477 + b26*t479 + b27*t470 + b27*t474 - b27*t476 + b28*t472 + b28*t475 - b28*t478 + t108*t384 - t110*t323 + t112*t384 + t117*t323 - t118*t384 + t122*t323 + t144*t406 + t147*t407 + t247*t480;
  M(4, 14) = -b13*t307 - b13*t308 + b13*t350 + b13*t396 + b13*t455 + b16*t461 + b16*t462 + b23*t363 + b24*t481 + b25*t483 + b26*t485 + b26*t486 + b26*t488 + b27*t482 - b27*t487 + b28*t484 - b28*t489 + b30*t292 + b33*t356 + b34*t469 + b35*t471 + b36*t473 + b36*t477 + b36*t479 + b37*t470 + b37*t474 - b37*t476 + b38*t472 + b38*t475 - b38*t478 + t108*t388 - t110*t326 - t111*t326 + t112*t388 + t117*t326 - t118*t388 - t120*t388 + t122*t326 + t126*t384 - t128*t323 + t130*t384 + t135*t323 - t136*t384 + t140*t323 + t150*t406 + t154*t406 + t156*t407 + t161*t407 + t268*t315;
  M(4, 15) = -b13*t279 - b13*t280 + b13*t282 + b13*t283 + b13*t284 + b13*t285 - b13*t286 - b13*t287 + b16*t467 + b16*t468 + b33*t363 + b34*t481 + b35*t483 + b36*t485 + b36*t486 + b36*t488 + b37*t482 - b37*t487 + b38*t484 - b38*t489 + t126*t388 - t128*t326 + t130*t388 + t135*t326 - t136*t388 + t140*t326 + t164*t406 + t166*t407 + t281*t480;
  M(4, 16) = -b23*t245 - b23*t246 + b23*t248 + b23*t257 + b23*t259 + b23*t260 - b23*t261 - b23*t262 + b23*b23*b23 + b27*t490 + b28*t491 + t144*t384 + t147*t323;
  M(4, 17) = -b23*t307 - b23*t308 + b23*t350 + b23*t371 + b23*t396 + b26*t461 + b26*t462 + b27*t492 + b28*t493 - b33*t245 - b33*t246 + 3*b33*t247 + b33*t248 + b33*t257 + b33*t259 + b33*t260 - b33*t261 - b33*t262 + b37*t490 + b38*t491 + t144*t388 - t146*t326 + t147*t326 - t148*t388 + t150*t384 + t154*t384 + t156*t323 + t161*t323 + t268*t327;
  M(4, 18) = -b23*t279 - b23*t280 + 3*b23*t281 + b23*t282 + b23*t283 + b23*t284 + b23*t285 - b23*t286 - b23*t287 + b26*t467 + b26*t468 - b33*t307 - b33*t308 + b33*t350 + b33*t371 + b33*t396 + b36*t461 + b36*t462 + b37*t492 + b38*t493 + t150*t388 - t152*t326 + t154*t388 + t156*t326 - t157*t388 + t161*t326 + t164*t384 + t166*t323 + t268*t331;
  M(4, 19) = -b33*t279 - b33*t280 + b33*t282 + b33*t283 + b33*t284 + b33*t285 - b33*t286 - b33*t287 + b33*b33*b33 + b36*t467 + b36*t468 + t164*t388 + t166*t326;
  M(5, 0) = b00*t172 + b04*t168 - b04*t169 + b04*t170 - b04*t171 + b04*t177 + b04*t178 - b04*t179 - b04*t201 + b04*b04*b04 + t1*t409 + t200*t35 + t27*t318;
  M(5, 1) = b14*t180 - b14*t181 + b14*t182 - b14*t183 + b14*t189 + b14*t190 - b14*t191 - b14*t204 + b14*b14*b14 + t187*t9 + t203*t44 + t316*t8 + t38*t407;
  M(5, 2) = b04*t377 + b04*t439 + b10*t172 + b14*t168 - b14*t169 + b14*t170 - b14*t171 + b14*t177 + b14*t178 - b14*t179 - b14*t201 + b14*t494 - t0*t203 + t1*t407 + t14*t318 + t17*t409 + t18*t200 - t187*t28 + t187*t35 + t192*t21 + t192*t62 + t193*t197 + t195*t197 + t200*t68 + t27*t316 - t316*t34 + t318*t54 - t407*t5 + t409*t50;
  M(5, 3) = b04*t180 - b04*t181 + b04*t182 - b04*t183 + b04*t189 + b04*t190 - b04*t191 - b04*t204 + b04*t496 + b05*t495 + b07*t422 - t11*t318 + t14*t316 + t17*t407 + t18*t187 + t184*t193 + t184*t195 + t187*t68 - t192*t36 + t192*t44 - t200*t6 + t200*t9 + t203*t21 + t203*t62 + t316*t54 + t318*t8 + t38*t409 + t407*t50 - t409*t46;
  M(5, 4) = b20*t172 - b20*t209 + b21*t325 + b23*t412 + b23*t417 + b24*t168 - b24*t169 + b24*t170 - b24*t171 + b24*t177 + b24*t178 - b24*t179 - b24*t201 + b24*t494 + b25*t498 + b25*t499 + b27*t415 + b27*t416 + t1*t323 + t192*t82 + t192*t84 + t222*t497 - t223*t28 + t223*t35 + t27*t328 - t323*t5 - t328*t34 + t409*t73 + t409*t77;
  M(5, 5) = b30*t172 - b30*t209 + b31*t325 + b33*t412 + b33*t417 + b34*t168 - b34*t169 + b34*t170 - b34*t171 + b34*t177 + b34*t178 - b34*t179 - b34*t201 + b34*t494 + b35*t498 + b35*t499 + b37*t415 + b37*t416 + t1*t326 + t100*t192 + t102*t192 + t228*t497 - t229*t28 + t229*t35 + t27*t332 - t326*t5 - t332*t34 + t409*t91 + t409*t95;
  M(5, 6) = b21*t330 + b23*t419 + b23*t424 + b24*t180 - b24*t181 + b24*t182 - b24*t183 + b24*t189 + b24*t190 - b24*t191 - b24*t204 + b24*t496 + b25*t495 + b25*t501 + b27*t422 + b27*t423 + t109*t407 - t11*t328 + t113*t407 + t118*t203 + t120*t203 + t222*t500 - t223*t6 + t223*t9 - t236*t36 + t236*t44 + t323*t38 - t323*t46 + t328*t8;
  M(5, 7) = b31*t330 + b33*t419 + b33*t424 + b34*t180 - b34*t181 + b34*t182 - b34*t183 + b34*t189 + b34*t190 - b34*t191 - b34*t204 + b34*t496 + b35*t495 + b35*t501 + b37*t422 + b37*t423 - t11*t332 + t127*t407 + t131*t407 + t136*t203 + t138*t203 + t228*t500 - t229*t6 + t229*t9 - t244*t36 + t244*t44 + t326*t38 - t326*t46 + t332*t8;
  M(5, 8) = b07*t479 + b21*t336 + b21*t338 + b23*t427 + b23*t430 + b23*t435 + b23*t438 + b24*t377 + b24*t439 - b24*t442 + b24*t503 + b25*t504 + b25*t505 + b25*t507 + b27*t431 + b27*t433 + b27*t437 + b27*t440 + t109*t409 + t113*t409 + t118*t192 - t12*t223 + t120*t192 + t14*t328 - t16*t236 + t17*t323 + t18*t223 + t193*t219 + t195*t219 - t196*t219 - t20*t328 - t203*t72 + t203*t82 + t203*t84 + t21*t236 - t22*t323 + t222*t502 + t222*t506 - t223*t55 + t223*t68 - t236*t48 + t236*t62 + t323*t50 - t323*t64 + t328*t54 - t328*t67 + t407*t73 + t407*t77 - t407*t83;
  M(5, 9) = b07*t488 + b31*t336 + b31*t338 + b33*t427 + b33*t430 + b33*t435 + b33*t438 + b34*t377 + b34*t439 - b34*t442 + b34*t503 + b35*t504 + b35*t505 + b35*t507 + b37*t431 + b37*t433 + b37*t437 + b37*t440 + t100*t203 - t101*t407 + t102*t203 - t12*t229 + t127*t409 + t131*t409 + t136*t192 + t138*t192 + t14*t332 - t16*t244 + t17*t326 + t18*t229 + t193*t226 + t195*t226 - t196*t226 - t20*t332 - t203*t90 + t21*t244 - t22*t326 + t228*t502 + t228*t506 - t229*t55 + t229*t68 - t244*t48 + t244*t62 + t326*t50 - t326*t64 + t332*t54 - t332*t67 + t407*t91 + t407*t95;
  M(5, 10) = b04*t245 - b04*t246 + b04*t247 - b04*t248 - b04*t257 + b04*t260 + b04*t261 - b04*t262 + b25*t510 - b26*t448 + b26*t450 + b27*t451 + b27*t453 + b28*t511 + b28*t513 - b28*t514 + t145*t409 + t148*t192 + t219*t389 + t219*t508 + t222*t509 + t222*t512 - t236*t72 + t236*t82 + t236*t84 + t259*t515 + t323*t73 + t323*t77 - t323*t83;
  M(5, 11) = b04*t519 + b25*t521 + b26*t464 - b26*t523 + b27*t463 + b27*t465 + b28*t522 + b28*t525 - b28*t526 + b35*t510 - b36*t448 + b36*t450 + b37*t451 + b37*t453 + b38*t511 + b38*t513 - b38*t514 + t100*t236 - t101*t323 + t102*t236 + t151*t409 + t155*t409 + t157*t192 + t159*t192 + t197*t265 + t197*t267 - t197*t268 + t197*t269 - t197*t270 + t197*t520 + t219*t393 + t219*t516 + t222*t517 + t222*t524 + t226*t389 + t226*t508 + t228*t509 + t228*t512 - t236*t90 - t244*t72 - t244*t76 + t244*t82 + t244*t84 + t323*t91 + t323*t95 + t326*t73 + t326*t77 - t326*t83 - t326*t85;
  M(5, 12) = b04*t279 - b04*t280 + b04*t281 - b04*t282 - b04*t283 + b04*t285 + b04*t286 - b04*t287 + b35*t521 + b36*t464 - b36*t523 + b37*t463 + b37*t465 + b38*t522 + b38*t525 - b38*t526 + t100*t244 - t101*t326 + t102*t244 + t162*t409 + t167*t192 + t226*t393 + t226*t516 + t228*t517 + t228*t524 - t244*t90 + t284*t515 + t326*t91 + t326*t95;
  M(5, 13) = b14*t245 - b14*t246 + b14*t247 - b14*t248 - b14*t257 + b14*t260 + b14*t261 - b14*t262 + b25*t529 - b26*t474 + b26*t476 + b27*t477 + b27*t479 + b28*t530 + b28*t532 - b28*t533 - t108*t236 + t109*t323 + t113*t323 + t118*t236 - t119*t323 + t120*t236 + t145*t407 + t148*t203 + t219*t398 + t219*t527 + t222*t528 + t222*t531 + t259*t534;
  M(5, 14) = b14*t519 + b25*t537 + b26*t487 - b26*t539 + b27*t486 + b27*t488 + b28*t538 + b28*t541 - b28*t542 + b35*t529 - b36*t474 + b36*t476 + b37*t477 + b37*t479 + b38*t530 + b38*t532 - b38*t533 - t108*t244 + t109*t326 - t112*t244 + t113*t326 + t118*t244 - t119*t326 + t120*t244 - t121*t326 - t126*t236 + t127*t323 + t131*t323 + t136*t236 - t137*t323 + t138*t236 + t151*t407 + t155*t407 + t157*t203 + t159*t203 + t184*t265 + t184*t267 - t184*t268 + t184*t269 - t184*t270 + t184*t520 + t219*t402 + t219*t535 + t222*t536 + t222*t540 + t226*t398 + t226*t527 + t228*t528 + t228*t531;
  M(5, 15) = b14*t279 - b14*t280 + b14*t281 - b14*t282 - b14*t283 + b14*t285 + b14*t286 - b14*t287 + b35*t537 + b36*t487 - b36*t539 + b37*t486 + b37*t488 + b38*t538 + b38*t541 - b38*t542 - t126*t244 + t127*t326 + t131*t326 + t136*t244 - t137*t326 + t138*t244 + t162*t407 + t167*t203 + t226*t402 + t226*t535 + t228*t536 + t228*t540 + t284*t534;
  M(5, 16) = b24*t245 - b24*t246 + b24*t247 - b24*t248 - b24*t257 + b24*t260 + b24*t261 - b24*t262 + b24*b24*b24 + b28*t544 + t145*t323 + t148*t236 + t222*t543;
  M(5, 17) = b28*t546 + b28*t548 + b34*t245 - b34*t246 + b34*t247 - b34*t248 - b34*t257 + 3*b34*t259 + b34*t260 + b34*t261 - b34*t262 + b38*t544 - t144*t244 + t145*t326 + t148*t244 - t149*t326 + t151*t323 + t155*t323 + t157*t236 + t159*t236 + t219*t265 + t219*t267 - t219*t268 + t219*t269 - t219*t270 + t219*t520 + t222*t545 + t222*t547 + t228*t543;
  M(5, 18) = b24*t279 - b24*t280 + b24*t281 - b24*t282 - b24*t283 + 3*b24*t284 + b24*t285 + b24*t286 - b24*t287 + b34*t307 - b34*t308 + b34*t396 + b35*t352 + b38*t546 + b38*t548 - t150*t244 + t151*t326 + t155*t326 + t157*t244 - t158*t326 + t159*t244 + t162*t323 + t167*t236 + t222*t549 + t226*t265 + t226*t267 - t226*t268 + t228*t545 + t228*t547;
  M(5, 19) = b34*t279 - b34*t280 + b34*t281 - b34*t282 - b34*t283 + b34*t285 + b34*t286 - b34*t287 + b34*b34*b34 + b37*t468 + t162*t326 + t167*t244 + t228*t549;
  M(6, 0) = b00*t174 - b05*t168 + b05*t169 + b05*t170 - b05*t171 + b05*t176 - b05*t178 + b05*t179 - b05*t201 + b05*b05*b05 + t198*t28 + t318*t33 + t408*t5;
  M(6, 1) = -b15*t180 + b15*t181 + b15*t182 - b15*t183 + b15*t188 - b15*t190 + b15*t191 - b15*t204 + b15*b15*b15 + t10*t316 + t185*t6 + t203*t40 + t406*t46;
  M(6, 2) = b05*t320 + b05*t442 + b10*t174 - b15*t168 + b15*t169 + b15*t170 - b15*t171 + b15*t176 - b15*t178 + b15*t179 - b15*t201 + b15*t550 - t1*t406 + t12*t198 + t15*t192 + t185*t28 - t185*t35 + t19*t318 + t192*t52 + t194*t199 + t195*t199 + t198*t55 - t203*t3 + t22*t408 - t29*t316 + t316*t33 + t318*t66 + t406*t5 + t408*t64;
  M(6, 3) = -b05*t180 + b05*t181 + b05*t182 - b05*t183 + b05*t188 - b05*t190 + b05*t191 - b05*t204 + b05*t551 + b08*t423 + b15*t320 + t10*t318 + t12*t185 + t15*t203 + t185*t55 + t186*t194 + t186*t195 + t19*t316 + t192*t40 - t192*t42 + t198*t6 - t198*t9 + t203*t52 + t22*t406 + t316*t66 - t318*t7 - t38*t408 + t406*t64 + t408*t46;
  M(6, 4) = b08*t451 + b20*t174 - b20*t210 + b22*t381 + b23*t413 + b23*t418 + b24*t498 - b25*t168 + b25*t169 + b25*t170 - b25*t171 + b25*t176 - b25*t178 + b25*t179 - b25*t201 + b25*t550 + b28*t415 + b28*t416 - t1*t384 + t192*t74 + t192*t75 + t222*t28 - t222*t35 + t223*t497 - t29*t328 + t328*t33 + t384*t5 + t408*t83 + t408*t85;
  M(6, 5) = b08*t463 + b30*t174 - b30*t210 + b32*t381 + b33*t413 + b33*t418 + b34*t498 - b35*t168 + b35*t169 + b35*t170 - b35*t171 + b35*t176 - b35*t178 + b35*t179 - b35*t201 + b35*t550 + b38*t415 + b38*t416 - t1*t388 + t101*t408 + t103*t408 + t192*t92 + t192*t93 + t228*t28 - t228*t35 + t229*t497 - t29*t332 + t33*t332 + t388*t5;
  M(6, 6) = b18*t477 + b22*t383 + b23*t420 + b23*t425 + b24*t495 - b25*t180 + b25*t181 + b25*t182 - b25*t183 + b25*t188 - b25*t190 + b25*t191 - b25*t204 + b25*t551 + b28*t422 + b28*t423 + t10*t328 + t110*t203 + t111*t203 + t119*t406 + t121*t406 + t222*t6 - t222*t9 + t223*t500 + t236*t40 - t236*t42 - t328*t7 - t38*t384 + t384*t46;
  M(6, 7) = b18*t486 + b32*t383 + b33*t420 + b33*t425 + b34*t495 - b35*t180 + b35*t181 + b35*t182 - b35*t183 + b35*t188 - b35*t190 + b35*t191 - b35*t204 + b35*t551 + b38*t422 + b38*t423 + t10*t332 + t128*t203 + t129*t203 + t137*t406 + t139*t406 + t228*t6 - t228*t9 + t229*t500 + t244*t40 - t244*t42 - t332*t7 - t38*t388 + t388*t46;
  M(6, 8) = b07*t533 + b08*t477 + b22*t386 + b22*t387 + b23*t428 + b23*t432 + b23*t436 + b23*t441 + b24*t504 + b24*t505 + b25*t320 - b25*t439 + b25*t442 + b25*t553 + b28*t431 + b28*t433 + b28*t437 + b28*t440 + t110*t192 + t111*t192 + t119*t408 + t12*t222 + t121*t408 - t13*t328 + t15*t236 - t17*t384 - t18*t222 + t19*t328 + t194*t220 + t195*t220 - t196*t220 + t203*t74 + t203*t75 - t203*t81 + t22*t384 + t222*t55 - t222*t68 + t223*t502 + t223*t506 - t23*t236 + t236*t52 - t236*t60 - t328*t56 + t328*t66 - t384*t50 + t384*t64 - t406*t73 + t406*t83 + t406*t85;
  M(6, 9) = b07*t542 + b08*t486 + b32*t386 + b32*t387 + b33*t428 + b33*t432 + b33*t436 + b33*t441 + b34*t504 + b34*t505 + b35*t320 - b35*t439 + b35*t442 + b35*t553 + b38*t431 + b38*t433 + b38*t437 + b38*t440 + t101*t406 + t103*t406 + t12*t228 + t128*t192 + t129*t192 - t13*t332 + t137*t408 + t139*t408 + t15*t244 - t17*t388 - t18*t228 + t19*t332 + t194*t227 + t195*t227 - t196*t227 + t203*t92 + t203*t93 - t203*t99 + t22*t388 + t228*t55 - t228*t68 + t229*t502 + t229*t506 - t23*t244 + t244*t52 - t244*t60 - t332*t56 + t332*t66 - t388*t50 + t388*t64 - t406*t91;
  M(6, 10) = -b05*t245 + b05*t246 + b05*t247 - b05*t248 - b05*t257 + b05*t259 - b05*t261 + b05*t262 + b25*t555 - b26*t449 + b26*t452 - b27*t513 + b27*t514 + b28*t451 + b28*t453 + b28*t556 + t146*t192 + t149*t408 + t220*t508 + t220*t554 + t223*t509 + t223*t512 + t236*t74 + t236*t75 - t236*t81 + t260*t557 - t384*t73 + t384*t83 + t384*t85;
  M(6, 11) = b25*t559 + b26*t466 - b26*t561 - b27*t525 + b27*t526 + b28*t463 + b28*t465 + b28*t560 + b34*t510 + b35*t555 - b36*t449 + b36*t452 - b37*t513 + b37*t514 + b38*t451 + b38*t453 + b38*t556 + t101*t384 + t103*t384 + t152*t192 + t153*t192 + t158*t408 + t160*t408 + t199*t266 + t199*t267 - t199*t268 - t199*t269 + t199*t270 + t220*t516 + t220*t558 + t223*t517 + t223*t524 + t227*t508 + t227*t554 + t229*t509 + t229*t512 + t236*t92 + t236*t93 - t236*t99 + t244*t74 + t244*t75 - t244*t81 - t244*t86 - t384*t91 - t388*t73 - t388*t77 + t388*t83 + t388*t85 + t520*t552;
  M(6, 12) = -b05*t279 + b05*t280 + b05*t281 - b05*t282 - b05*t283 + b05*t284 - b05*t286 + b05*t287 + b35*t559 + b36*t466 - b36*t561 - b37*t525 + b37*t526 + b38*t463 + b38*t465 + b38*t560 + t101*t388 + t103*t388 + t163*t192 + t165*t408 + t227*t516 + t227*t558 + t229*t517 + t229*t524 + t244*t92 + t244*t93 - t244*t99 + t285*t557 - t388*t91;
  M(6, 13) = -b15*t245 + b15*t246 + b15*t247 - b15*t248 - b15*t257 + b15*t259 - b15*t261 + b15*t262 + b25*t563 - b26*t475 + b26*t478 - b27*t532 + b27*t533 + b28*t477 + b28*t479 + b28*t564 - t109*t384 + t110*t236 + t111*t236 - t117*t236 + t119*t384 + t121*t384 + t146*t203 + t149*t406 + t220*t527 + t220*t562 + t223*t528 + t223*t531 + t260*t565;
  M(6, 14) = 6*b15*t520 + b25*t567 + b26*t489 - b26*t569 - b27*t541 + b27*t542 + b28*t486 + b28*t488 + b28*t568 + b35*t563 - b36*t475 + b36*t478 - b37*t532 + b37*t533 + b38*t477 + b38*t479 + b38*t564 - t109*t388 + t110*t244 + t111*t244 - t113*t388 - t117*t244 + t119*t388 + t121*t388 - t122*t244 - t127*t384 + t128*t236 + t129*t236 - t135*t236 + t137*t384 + t139*t384 + t152*t203 + t153*t203 + t158*t406 + t160*t406 + t186*t266 + t186*t267 - t186*t268 - t186*t269 + t186*t270 + t186*t518 + t220*t535 + t220*t566 + t223*t536 + t223*t540 + t227*t527 + t227*t562 + t229*t528 + t229*t531;
  M(6, 15) = -b15*t279 + b15*t280 + b15*t281 - b15*t282 - b15*t283 + b15*t284 - b15*t286 + b15*t287 + b35*t567 + b36*t489 - b36*t569 - b37*t541 + b37*t542 + b38*t486 + b38*t488 + b38*t568 - t127*t388 + t128*t244 + t129*t244 - t135*t244 + t137*t388 + t139*t388 + t163*t203 + t165*t406 + t227*t535 + t227*t566 + t229*t536 + t229*t540 + t285*t565;
  M(6, 16) = -b25*t245 + b25*t246 + b25*t247 - b25*t248 - b25*t257 + b25*t259 - b25*t261 + b25*t262 + b25*b25*b25 + b28*t570 + t146*t236 + t149*t384 + t223*t543;
  M(6, 17) = b25*t350 + b28*t461 + b28*t571 - b35*t245 + b35*t246 + b35*t247 - b35*t248 - b35*t257 + b35*t259 + 3*b35*t260 - b35*t261 + b35*t262 + b38*t570 - t145*t388 + t146*t244 - t147*t244 + t149*t388 + t152*t236 + t153*t236 + t158*t384 + t160*t384 + t220*t266 + t220*t267 - t220*t268 - t220*t269 + t220*t270 + t223*t545 + t223*t547 + t229*t543;
  M(6, 18) = -b25*t279 + b25*t280 + b25*t281 - b25*t282 - b25*t283 + b25*t284 + 3*b25*t285 - b25*t286 + b25*t287 + b34*t352 - b35*t307 + b35*t308 + b35*t350 + b38*t461 + b38*t571 - t151*t388 + t152*t244 + t153*t244 - t156*t244 + t158*t388 + t160*t388 + t163*t236 + t165*t384 + t223*t549 + t227*t266 + t227*t267 - t227*t268 + t229*t545 + t229*t547;
  M(6, 19) = -b35*t279 + b35*t280 + b35*t281 - b35*t282 - b35*t283 + b35*t284 - b35*t286 + b35*t287 + b35*b35*b35 + b38*t467 + t163*t244 + t165*t388 + t229*t549;
  M(7, 0) = b01*t212 + b02*t213 - b06*t168 - b06*t169 + b06*t170 - b06*t176 - b06*t177 + b06*t178 + b06*t179 + b06*t201 + b06*b06*b06 + t197*t27 + t199*t33;
  M(7, 1) = -b16*t180 - b16*t181 + b16*t182 - b16*t188 - b16*t189 + b16*t190 + b16*t191 + b16*t204 + b16*b16*b16 + t10*t186 + t184*t8 + t37*t407 + t406*t43;
  M(7, 2) = b06*t439 + b06*t442 + b10*t211 - b11*t173 + b11*t212 - b12*t175 + b12*t213 - b16*t168 - b16*t169 + b16*t170 - b16*t176 - b16*t177 + b16*t178 + b16*t179 + b16*t201 + b16*t572 - t13*t199 + t14*t197 + t184*t27 + t186*t33 + t19*t199 + t195*t318 - t197*t20 + t197*t54 + t199*t66 + t408*t61 + t408*t70 + t409*t49 + t409*t59;
  M(7, 3) = -b06*t180 - b06*t181 + b06*t182 - b06*t188 - b06*t189 + b06*t190 + b06*t191 + b06*t204 + b06*t573 + b07*t424 + b08*t425 + b10*t234 + t10*t199 - t11*t197 + t14*t184 + t184*t54 + t186*t19 + t186*t66 + t195*t316 + t197*t8 - t199*t7 + t37*t409 - t39*t408 + t406*t61 + t406*t70 + t407*t49 + t407*t59 + t408*t43 - t409*t47;
  M(7, 4) = b20*t211 - b21*t173 + b21*t212 - b22*t175 + b22*t213 + b23*t414 + b23*t415 + b23*t416 - b26*t168 - b26*t169 + b26*t170 - b26*t176 - b26*t177 + b26*t178 + b26*t179 + b26*t201 + b26*t572 + b27*t206 + b27*t412 + b27*t417 + b28*t207 + b28*t413 + b28*t418 + t219*t27 - t219*t34 - t220*t29 + t220*t33 + t408*t88 + t409*t80;
  M(7, 5) = b30*t211 - b31*t173 + b31*t212 - b32*t175 + b32*t213 + b33*t414 + b33*t415 + b33*t416 - b36*t168 - b36*t169 + b36*t170 - b36*t176 - b36*t177 + b36*t178 + b36*t179 + b36*t201 + b36*t572 + b37*t206 + b37*t412 + b37*t417 + b38*t207 + b38*t413 + b38*t418 + t106*t408 + t226*t27 - t226*t34 - t227*t29 + t227*t33 + t409*t98;
  M(7, 6) = b20*t221 + b23*t421 + b23*t422 + b23*t423 - b26*t180 - b26*t181 + b26*t182 - b26*t188 - b26*t189 + b26*t190 + b26*t191 + b26*t204 + b26*t573 + b27*t216 + b27*t419 + b27*t424 + b28*t217 + b28*t420 + b28*t425 + t10*t220 - t11*t219 + t116*t407 + t124*t406 + t219*t8 - t220*t7 + t323*t37 - t323*t47 - t384*t39 + t384*t43;
  M(7, 7) = b30*t221 + b33*t421 + b33*t422 + b33*t423 - b36*t180 - b36*t181 + b36*t182 - b36*t188 - b36*t189 + b36*t190 + b36*t191 + b36*t204 + b36*t573 + b37*t216 + b37*t419 + b37*t424 + b38*t217 + b38*t420 + b38*t425 + t10*t227 - t11*t226 + t134*t407 + t142*t406 + t226*t8 - t227*t7 + t326*t37 - t326*t47 - t388*t39 + t388*t43;
  M(7, 8) = b20*t234 + b20*t241 + b23*t429 + b23*t431 + b23*t433 + b23*t434 + b23*t437 + b23*t440 - b26*t319 - b26*t320 + b26*t333 - b26*t377 + b26*t439 + b26*t442 + b26*t574 + b27*t231 + b27*t235 + b27*t427 + b27*t430 + b27*t435 + b27*t438 + b28*t232 + b28*t238 + b28*t428 + b28*t432 + b28*t436 + b28*t441 + t116*t409 + t124*t408 - t13*t220 + t14*t219 + t19*t220 - t193*t328 + t195*t328 - t20*t219 + t219*t54 - t219*t67 - t220*t56 + t220*t66 + t323*t49 + t323*t59 - t323*t65 - t323*t69 - t384*t51 - t384*t57 + t384*t61 + t384*t70 + t406*t88 + t407*t80;
  M(7, 9) = b30*t234 + b30*t241 + b33*t429 + b33*t431 + b33*t433 + b33*t434 + b33*t437 + b33*t440 - b36*t319 - b36*t320 + b36*t333 - b36*t377 + b36*t439 + b36*t442 + b36*t574 + b37*t231 + b37*t235 + b37*t427 + b37*t430 + b37*t435 + b37*t438 + b38*t232 + b38*t238 + b38*t428 + b38*t432 + b38*t436 + b38*t441 + t106*t406 - t13*t227 + t134*t409 + t14*t226 + t142*t408 + t19*t227 - t193*t332 + t195*t332 - t20*t226 + t226*t54 - t226*t67 - t227*t56 + t227*t66 + t326*t49 + t326*t59 - t326*t65 - t326*t69 - t388*t51 - t388*t57 + t388*t61 + t388*t70 + t407*t98;
  M(7, 10) = b03*t570 - b06*t245 - b06*t246 + b06*t247 + b06*t257 - b06*t259 - b06*t260 + b06*t261 + b06*t262 + b20*t390 - b24*t444 + b24*t450 - b25*t446 + b25*t452 + b26*t339 + b27*t443 + b27*t575 + b27*t579 + b28*t445 + b28*t576 + b28*t578 + b28*t580 + t223*t577 + t248*t581 - t250*t384 - t252*t323 + t317*t543 + t323*t80 + t384*t88;
  M(7, 11) = b03*t461 + b03*t462 + b03*t571 + b06*t307 + b06*t308 - b06*t350 - b06*t396 + b06*t586 + b20*t584 - b24*t457 - b25*t459 + b27*t456 + b27*t582 + b27*t587 + b28*t458 + b28*t583 + b28*t588 + b30*t254 + b30*t340 + b30*t390 + b33*t451 + b33*t453 - b34*t444 + b34*t450 - b35*t446 + b35*t452 + b36*t339 + b37*t443 + b37*t575 + b37*t579 + b38*t445 + b38*t576 + b38*t578 + b38*t580 + t106*t384 + t223*t585 + t229*t577 - t250*t388 - t252*t326 + t267*t318 - t272*t384 - t274*t323 + t317*t545 + t317*t547 + t323*t98 + t326*t80 - t326*t87 - t388*t78 + t388*t88;
  M(7, 12) = b03*t467 + b03*t468 - b06*t279 - b06*t280 + b06*t281 + b06*t283 - b06*t284 - b06*t285 + b06*t286 + b06*t287 + b30*t584 - b34*t457 + b34*t464 - b35*t459 + b35*t466 + b36*t346 + b37*t456 + b37*t582 + b37*t587 + b38*t458 + b38*t583 + b38*t588 + t106*t388 + t229*t585 - t272*t388 - t274*t326 + t282*t581 + t317*t549 + t326*t98;
  M(7, 13) = b13*t570 - b16*t245 - b16*t246 + b16*t247 + b16*t257 - b16*t259 - b16*t260 + b16*t261 + b16*t262 + b20*t399 - b24*t470 + b24*t476 - b25*t472 + b25*t478 + b26*t356 + b27*t469 + b27*t589 + b27*t593 + b28*t471 + b28*t590 + b28*t592 + b28*t594 + t116*t323 + t124*t384 + t223*t591 + t248*t595 - t289*t384 - t291*t323 + t315*t543;
  M(7, 14) = b13*t461 + b13*t462 + b13*t571 + b16*t307 + b16*t308 - b16*t350 - b16*t396 + b16*t586 + b20*t598 - b24*t482 - b25*t484 + b27*t481 + b27*t596 + b27*t600 + b28*t483 + b28*t597 + b28*t601 + b30*t293 + b30*t357 + b30*t399 + b33*t477 + b33*t479 - b34*t470 + b34*t476 - b35*t472 + b35*t478 + b36*t356 + b37*t469 + b37*t589 + b37*t593 + b38*t471 + b38*t590 + b38*t592 + b38*t594 - t114*t388 + t116*t326 - t123*t326 + t124*t388 + t134*t323 + t142*t384 + t223*t599 + t229*t591 + t267*t316 - t289*t388 - t291*t326 - t298*t384 - t300*t323 + t315*t545 + t315*t547;
  M(7, 15) = b13*t467 + b13*t468 - b16*t279 - b16*t280 + b16*t281 + b16*t283 - b16*t284 - b16*t285 + b16*t286 + b16*t287 + b30*t598 - b34*t482 + b34*t487 - b35*t484 + b35*t489 + b36*t363 + b37*t481 + b37*t596 + b37*t600 + b38*t483 + b38*t597 + b38*t601 + t134*t326 + t142*t388 + t229*t599 + t282*t595 - t298*t388 - t300*t326 + t315*t549;
  M(7, 16) = b20*t404 + b23*t570 - b26*t245 - b26*t246 + b26*t247 + b26*t257 - b26*t259 - b26*t260 + b26*t261 + b26*t262 + b26*b26*b26 + b28*t603 + t223*t602;
  M(7, 17) = b20*t405 + b21*t604 + b23*t461 + b23*t462 + b23*t571 + b26*t307 + b26*t308 - b26*t350 + b26*t371 - b26*t396 + b28*t607 + b30*t404 + b33*t570 - b36*t245 - b36*t246 + b36*t247 + 3*b36*t248 + b36*t257 - b36*t259 - b36*t260 + b36*t261 + b36*t262 + b38*t603 + t223*t605 + t223*t606 + t229*t602 - t265*t328 - t266*t328 + t267*t328;
  M(7, 18) = b21*t608 + b23*t467 + b23*t468 - b26*t279 - b26*t280 + b26*t281 + 3*b26*t282 + b26*t283 - b26*t284 - b26*t285 + b26*t286 + b26*t287 + b30*t405 + b31*t604 + b33*t461 + b33*t462 + b33*t571 + b36*t307 + b36*t308 - b36*t350 + b36*t371 - b36*t396 + b38*t607 + t223*t609 + t229*t605 + t229*t606 - t265*t332 - t266*t332 + t267*t332;
  M(7, 19) = b31*t608 + b33*t467 + b33*t468 - b36*t279 - b36*t280 + b36*t281 + b36*t283 - b36*t284 - b36*t285 + b36*t286 + b36*t287 + b36*b36*b36 + t229*t609;
  M(8, 0) = b00*t173 + b07*t168 - b07*t169 - b07*t170 + b07*t171 + b07*t176 - b07*t177 + b07*t179 - b07*t201 + b07*b07*b07 + t199*t28 + t31*t409 + t317*t34;
  M(8, 1) = b17*t180 - b17*t181 - b17*t182 + b17*t183 + b17*t188 - b17*t189 + b17*t191 - b17*t204 + b17*b17*b17 + t11*t315 + t186*t6 + t203*t39 + t407*t45;
  M(8, 2) = b07*t320 + b07*t442 + b10*t173 + b17*t168 - b17*t169 - b17*t170 + b17*t171 + b17*t176 - b17*t177 + b17*t179 - b17*t201 + b17*t610 + t12*t199 - t14*t317 - t18*t199 + t186*t28 + t192*t51 + t192*t57 + t193*t198 + t196*t198 + t199*t55 + t20*t317 - t203*t30 - t26*t407 + t31*t407 + t315*t34 + t317*t67 + t409*t63 + t409*t71;
  M(8, 3) = b07*t180 - b07*t181 - b07*t182 + b07*t183 + b07*t188 - b07*t189 + b07*t191 - b07*t204 + b07*t611 + b08*t501 + b17*t320 + t11*t317 + t12*t186 + t185*t193 + t185*t196 + t186*t55 + t192*t39 - t192*t43 + t199*t6 - t199*t9 + t20*t315 + t203*t51 + t203*t57 + t315*t67 - t317*t8 + t407*t63 + t407*t71 - t409*t41 + t409*t45;
  M(8, 4) = b03*t448 + b20*t173 - b20*t212 + b21*t214 + b24*t415 + b24*t416 + b26*t206 + b26*t412 + b26*t417 + b27*t168 - b27*t169 - b27*t170 + b27*t171 + b27*t176 - b27*t177 + b27*t179 - b27*t201 + b27*t610 + b28*t498 + b28*t499 + t192*t78 + t220*t28 - t220*t35 + t223*t324 - t26*t323 - t27*t327 + t31*t323 + t327*t34 + t409*t89;
  M(8, 5) = b30*t173 - b30*t212 + b31*t214 + b34*t415 + b34*t416 + b36*t206 + b36*t412 + b36*t417 + b37*t168 - b37*t169 - b37*t170 + b37*t171 + b37*t176 - b37*t177 + b37*t179 - b37*t201 + b37*t610 + b38*t498 + b38*t499 + t107*t409 + t192*t96 + t226*t497 + t227*t28 - t227*t35 + t229*t324 - t26*t326 - t27*t331 + t31*t326 + t331*t34;
  M(8, 6) = b13*t474 + b21*t224 + b24*t422 + b24*t423 + b26*t216 + b26*t419 + b26*t424 + b27*t180 - b27*t181 - b27*t182 + b27*t183 + b27*t188 - b27*t189 + b27*t191 - b27*t204 + b27*t611 + b28*t495 + b28*t501 + t11*t327 + t114*t203 + t125*t407 + t220*t6 - t220*t9 + t223*t329 + t236*t39 - t236*t43 - t323*t41 + t323*t45 - t327*t8;
  M(8, 7) = b31*t224 + b34*t422 + b34*t423 + b36*t216 + b36*t419 + b36*t424 + b37*t180 - b37*t181 - b37*t182 + b37*t183 + b37*t188 - b37*t189 + b37*t191 - b37*t204 + b37*t611 + b38*t495 + b38*t501 + t11*t331 + t132*t203 + t143*t407 + t226*t500 + t227*t6 - t227*t9 + t229*t329 + t244*t39 - t244*t43 - t326*t41 + t326*t45 - t331*t8;
  M(8, 8) = b03*t474 + b13*t448 + b21*t237 + b21*t242 + b24*t431 + b24*t433 + b24*t437 + b24*t440 + b26*t231 + b26*t235 + b26*t427 + b26*t430 + b26*t435 + b26*t438 + b27*t320 - b27*t333 - b27*t377 + b27*t442 + b27*t613 + b28*t504 + b28*t505 + b28*t507 + b28*t614 + t114*t192 + t12*t220 + t125*t409 - t14*t327 - t18*t220 + t193*t222 - t194*t222 - t195*t222 + t196*t222 + t20*t327 + t203*t78 + t220*t55 - t220*t68 + t223*t335 + t223*t337 + t236*t51 + t236*t57 - t236*t61 - t236*t70 - t323*t53 - t323*t58 + t323*t63 + t323*t71 - t327*t54 + t327*t67 + t407*t89;
  M(8, 9) = b31*t237 + b31*t242 + b34*t431 + b34*t433 + b34*t437 + b34*t440 + b36*t231 + b36*t235 + b36*t427 + b36*t430 + b36*t435 + b36*t438 + b37*t320 - b37*t333 - b37*t377 + b37*t442 + b37*t613 + b38*t504 + b38*t505 + b38*t507 + b38*t614 + t107*t407 + t12*t227 + t132*t192 - t14*t331 + t143*t409 - t18*t227 + t193*t228 - t194*t228 - t195*t228 + t196*t228 + t20*t331 + t203*t96 + t226*t502 + t226*t506 + t227*t55 - t227*t68 + t229*t335 + t229*t337 + t244*t51 + t244*t57 - t244*t61 - t244*t70 - t326*t53 - t326*t58 + t326*t63 + t326*t71 - t331*t54 + t331*t67;
  M(8, 10) = b03*t490 + b07*t245 - b07*t246 - b07*t247 + b07*t248 - b07*t257 + b07*t259 - b07*t260 + b07*t262 - b22*t342 + b23*t448 + b24*t453 - b25*t511 + b26*t249 + b26*t443 - b27*t339 + b27*t555 + b28*t510 + b28*t616 + b28*t618 + t192*t305 + t222*t389 - t222*t508 + t222*t617 + t223*t341 + t223*t615 + t236*t78 + t261*t619 + t323*t89;
  M(8, 11) = b03*t492 + b24*t465 - b25*t522 - b27*t346 + b28*t521 + b28*t621 + b28*t623 + b31*t255 + b31*t390 - b32*t342 + b33*t444 + b33*t448 + b34*t451 + b34*t453 + b34*t556 - b35*t511 - b35*t513 + b36*t249 + b36*t443 - b37*t339 + b37*t555 + b38*t510 + b38*t616 + b38*t618 + t107*t323 + t192*t309 + t192*t311 - t198*t267 + t198*t268 + t198*t270 - t222*t516 + t222*t622 + t223*t351 + t223*t620 + t226*t509 + t226*t512 + t228*t389 - t228*t508 - t228*t554 + t228*t617 + t229*t341 + t229*t615 + t236*t96 + t244*t250 + t244*t78 - t244*t88 + t269*t612 - t326*t79 + t326*t89;
  M(8, 12) = b07*t279 - b07*t280 - b07*t281 + b07*t282 - b07*t283 + b07*t284 - b07*t285 + b07*t287 + b33*t523 + b34*t465 - b35*t522 + b36*t271 + b36*t456 - b37*t346 + b37*t559 + b38*t521 + b38*t621 + b38*t623 + t107*t326 + t192*t313 + t226*t517 + t228*t393 - t228*t516 - t228*t558 + t228*t622 + t229*t351 + t229*t620 + t244*t96 + t286*t619;
  M(8, 13) = b13*t490 + b17*t245 - b17*t246 - b17*t247 + b17*t248 - b17*t257 + b17*t259 - b17*t260 + b17*t262 - b22*t359 + b23*t474 + b24*t479 - b25*t530 + b26*t288 + b26*t469 - b27*t356 + b27*t563 + b28*t529 + b28*t625 + b28*t627 + t114*t236 + t125*t323 + t203*t305 + t222*t398 - t222*t527 + t222*t626 + t223*t358 + t223*t624 + t261*t628;
  M(8, 14) = b13*t492 + 6*b17*t269 + b24*t488 - b25*t538 - b27*t363 + b28*t537 + b28*t630 + b28*t632 + b31*t399 - b32*t359 + b33*t470 + b33*t474 + b34*t477 + b34*t479 + b34*t564 - b35*t530 + b36*t288 + b36*t469 - b37*t356 + b37*t563 + b38*t529 + b38*t625 + b38*t627 + t114*t244 - t115*t326 - t124*t244 + t125*t326 + t132*t236 + t143*t323 + t185*t265 - t185*t267 + t185*t268 + t185*t270 - t185*t520 + t203*t309 + t203*t311 - t222*t535 + t222*t631 + t223*t366 + t223*t629 + t226*t528 + t226*t531 + t228*t398 - t228*t527 - t228*t562 + t228*t626 + t229*t358 + t229*t624 + t244*t289;
  M(8, 15) = b17*t279 - b17*t280 - b17*t281 + b17*t282 - b17*t283 + b17*t284 - b17*t285 + b17*t287 + b33*t539 + b34*t488 - b35*t538 + b36*t297 + b36*t481 - b37*t363 + b37*t567 + b38*t537 + b38*t630 + b38*t632 + t132*t244 + t143*t326 + t203*t313 + t226*t536 + t228*t402 - t228*t535 - t228*t566 + t228*t631 + t229*t366 + t229*t629 + t286*t628;
  M(8, 16) = b23*t490 + b27*t245 - b27*t246 - b27*t247 + b27*t248 - b27*t257 + b27*t259 - b27*t260 + b27*t262 + b27*b27*b27 + b28*t634 + t223*t633 + t236*t305;
  M(8, 17) = b23*t492 + b27*t350 - b27*t396 + b28*t637 + b28*t638 + b33*t490 + b37*t245 - b37*t246 - b37*t247 + b37*t248 - b37*t257 + b37*t259 - b37*t260 + 3*b37*t261 + b37*t262 + b38*t634 - t222*t263 + t222*t265 - t222*t266 - t222*t267 + t222*t268 + t222*t270 + t223*t635 + t223*t636 + t226*t543 + t229*t633 + t236*t309 + t236*t311 + t244*t305;
  M(8, 18) = b27*t279 - b27*t280 - b27*t281 + b27*t282 - b27*t283 + b27*t284 - b27*t285 + 3*b27*t286 + b27*t287 + b33*t492 + b34*t462 + b37*t308 + b37*t350 - b37*t396 + b38*t637 + b38*t638 + t223*t639 + t226*t545 + t226*t547 - t228*t263 + t228*t265 - t228*t266 - t228*t267 + t228*t268 + t229*t635 + t229*t636 + t236*t313 + t244*t309 + t244*t311;
  M(8, 19) = b37*t279 - b37*t280 - b37*t281 + b37*t282 - b37*t283 + b37*t284 - b37*t285 + b37*t287 + b37*b37*b37 + t226*t549 + t226*t640 + t229*t639 + t244*t313;
  M(9, 0) = b00*t175 - b08*t168 + b08*t169 - b08*t170 + b08*t171 - b08*t176 + b08*t177 + b08*t178 - b08*t201 + b08*b08*b08 + t197*t35 + t26*t408 + t29*t317;
  M(9, 1) = -b18*t180 + b18*t181 - b18*t182 + b18*t183 - b18*t188 + b18*t189 + b18*t190 - b18*t204 + b18*b18*b18 + t184*t9 + t203*t47 + t315*t7 + t406*t41;
  M(9, 2) = b08*t377 + b08*t439 + b10*t175 - b18*t168 + b18*t169 - b18*t170 + b18*t171 - b18*t176 + b18*t177 + b18*t178 - b18*t201 + b18*t641 - t12*t197 + t13*t317 + t18*t197 + t184*t35 - t19*t317 + t192*t65 + t192*t69 + t194*t200 + t196*t200 + t197*t68 - t203*t24 + t26*t406 + t29*t315 - t31*t406 + t317*t56 + t408*t53 + t408*t58;
  M(9, 3) = -b08*t180 + b08*t181 - b08*t182 + b08*t183 - b08*t188 + b08*t189 + b08*t190 - b08*t204 + b08*t642 + b18*t377 + b18*t439 - t10*t317 + t13*t315 + t18*t184 + t184*t68 + t187*t194 + t187*t196 - t192*t37 + t192*t47 - t197*t6 + t197*t9 + t203*t65 + t203*t69 + t315*t56 + t317*t7 + t406*t53 + t406*t58 + t408*t41 - t408*t45;
  M(9, 4) = b03*t449 + b20*t175 - b20*t213 + b22*t215 + b25*t415 + b25*t416 + b26*t207 + b26*t413 + b26*t418 + b27*t498 + b27*t499 - b28*t168 + b28*t169 - b28*t170 + b28*t171 - b28*t176 + b28*t177 + b28*t178 - b28*t201 + b28*t641 + t192*t87 - t219*t28 + t219*t35 + t222*t324 + t26*t384 + t29*t327 - t31*t384 - t327*t33 + t408*t79;
  M(9, 5) = b30*t175 - b30*t213 + b32*t215 + b35*t415 + b35*t416 + b36*t207 + b36*t413 + b36*t418 + b37*t498 + b37*t499 - b38*t168 + b38*t169 - b38*t170 + b38*t171 - b38*t176 + b38*t177 + b38*t178 - b38*t201 + b38*t641 + t105*t192 - t226*t28 + t226*t35 + t227*t497 + t228*t324 + t26*t388 + t29*t331 - t31*t388 - t33*t331 + t408*t97;
  M(9, 6) = b13*t475 + b22*t225 + b25*t422 + b25*t423 + b26*t217 + b26*t420 + b26*t425 + b27*t495 + b27*t501 - b28*t180 + b28*t181 - b28*t182 + b28*t183 - b28*t188 + b28*t189 + b28*t190 - b28*t204 + b28*t642 - t10*t327 + t115*t406 + t123*t203 - t219*t6 + t219*t9 + t222*t329 - t236*t37 + t236*t47 + t327*t7 + t384*t41 - t384*t45;
  M(9, 7) = b32*t225 + b35*t422 + b35*t423 + b36*t217 + b36*t420 + b36*t425 + b37*t495 + b37*t501 - b38*t180 + b38*t181 - b38*t182 + b38*t183 - b38*t188 + b38*t189 + b38*t190 - b38*t204 + b38*t642 - t10*t331 + t133*t406 + t141*t203 - t226*t6 + t226*t9 + t227*t500 + t228*t329 - t244*t37 + t244*t47 + t331*t7 + t388*t41 - t388*t45;
  M(9, 8) = b03*t475 + b13*t449 + b22*t239 + b22*t243 + b25*t431 + b25*t433 + b25*t437 + b25*t440 + b26*t232 + b26*t238 + b26*t428 + b26*t432 + b26*t436 + b26*t441 + b27*t504 + b27*t505 + b27*t507 + b27*t614 - b28*t320 - b28*t333 + b28*t377 + b28*t439 + b28*t644 + t115*t408 - t12*t219 + t123*t192 + t13*t327 + t18*t219 - t19*t327 - t193*t223 + t194*t223 - t195*t223 + t196*t223 + t203*t87 - t219*t55 + t219*t68 + t222*t335 + t222*t337 - t236*t49 - t236*t59 + t236*t65 + t236*t69 + t327*t56 - t327*t66 + t384*t53 + t384*t58 - t384*t63 - t384*t71 + t406*t79;
  M(9, 9) = b32*t239 + b32*t243 + b35*t431 + b35*t433 + b35*t437 + b35*t440 + b36*t232 + b36*t238 + b36*t428 + b36*t432 + b36*t436 + b36*t441 + b37*t504 + b37*t505 + b37*t507 + b37*t614 - b38*t320 - b38*t333 + b38*t377 + b38*t439 + b38*t644 + t105*t203 - t12*t226 + t13*t331 + t133*t408 + t141*t192 + t18*t226 - t19*t331 - t193*t229 + t194*t229 - t195*t229 + t196*t229 - t226*t55 + t226*t68 + t227*t502 + t227*t506 + t228*t335 + t228*t337 - t244*t49 - t244*t59 + t244*t65 + t244*t69 + t331*t56 - t331*t66 + t388*t53 + t388*t58 - t388*t63 - t388*t71 + t406*t97;
  M(9, 10) = b01*t370 + b03*t491 - b08*t245 + b08*t246 - b08*t247 + b08*t248 - b08*t257 - b08*t259 + b08*t260 + b08*t261 + b23*t449 + b25*t451 + b25*t556 + b26*t251 + b26*t445 + b27*t510 - b28*t339 - b28*t555 + b28*t645 + b28*t646 + t192*t306 + t222*t341 - t223*t389 - t223*t508 + t223*t554 + t223*t617 + t236*t87 + t262*t647 + t384*t79;
  M(9, 11) = b01*t374 + b03*t493 + b22*t584 + b25*t463 + b25*t560 - b28*t346 - b28*t559 + b28*t649 + b31*t342 + b32*t256 + b33*t446 + b33*t449 + b34*t511 - b34*t514 + b35*t451 + b35*t453 + b35*t556 + b36*t251 + b36*t445 + b37*t510 - b38*t339 - b38*t555 + b38*t645 + b38*t646 + t105*t236 + t192*t310 + t192*t312 + t199*t648 - t200*t267 + t200*t268 + t200*t269 - t223*t393 - t223*t516 + t223*t558 + t223*t622 + t227*t509 + t227*t512 + t228*t341 - t229*t389 - t229*t508 + t229*t554 + t229*t617 + t244*t252 - t244*t80 + t244*t87 + t270*t643 + t384*t97 + t388*t79 - t388*t89;
  M(9, 12) = -b08*t279 + b08*t280 - b08*t281 + b08*t282 - b08*t283 - b08*t284 + b08*t285 + b08*t286 + b32*t584 + b35*t463 + b35*t560 + b36*t273 + b36*t458 + b37*t521 - b38*t346 - b38*t559 + b38*t649 + t105*t244 + t192*t314 + t199*t640 + t227*t517 + t227*t524 + t228*t351 - t229*t393 - t229*t516 + t229*t558 + t229*t622 + t287*t647 + t388*t97;
  M(9, 13) = b11*t370 + b13*t491 - b18*t245 + b18*t246 - b18*t247 + b18*t248 - b18*t257 - b18*t259 + b18*t260 + b18*t261 + b23*t475 + b25*t477 + b25*t564 + b26*t290 + b26*t471 + b27*t529 - b28*t356 - b28*t563 + b28*t650 + b28*t651 + t115*t384 + t123*t236 + t203*t306 + t222*t358 - t223*t398 - t223*t527 + t223*t562 + t223*t626 + t262*t652;
  M(9, 14) = b11*t374 + b13*t493 + 6*b18*t270 + b22*t598 + b25*t486 + b25*t568 - b28*t363 - b28*t567 + b28*t653 + b31*t359 + b33*t472 + b33*t475 + b34*t530 + b35*t477 + b35*t479 + b35*t564 + b36*t290 + b36*t471 + b37*t529 - b38*t356 - b38*t563 + b38*t650 + b38*t651 + t115*t388 - t116*t244 + t123*t244 - t125*t388 + t133*t384 + t141*t236 + t186*t648 + t187*t266 - t187*t267 + t187*t268 + t187*t269 - t187*t518 + t203*t310 + t203*t312 - t223*t402 - t223*t535 + t223*t566 + t223*t631 + t227*t528 + t227*t531 + t228*t358 - t229*t398 - t229*t527 + t229*t562 + t229*t626 + t244*t291;
  M(9, 15) = -b18*t279 + b18*t280 - b18*t281 + b18*t282 - b18*t283 - b18*t284 + b18*t285 + b18*t286 + b32*t598 + b35*t486 + b35*t568 + b36*t299 + b36*t483 + b37*t537 - b38*t363 - b38*t567 + b38*t653 + t133*t388 + t141*t244 + t186*t640 + t203*t314 + t227*t536 + t227*t540 + t228*t366 - t229*t402 - t229*t535 + t229*t566 + t229*t631 + t287*t652;
  M(9, 16) = b21*t370 + b23*t491 + b25*t570 - b28*t245 + b28*t246 - b28*t247 + b28*t248 - b28*t257 - b28*t259 + b28*t260 + b28*t261 + b28*b28*b28 + t236*t306;
  M(9, 17) = b21*t374 + b23*t493 + b25*t571 + b28*t307 - b28*t350 + b28*t396 + b31*t370 + b33*t491 + b34*t544 + b35*t570 - b38*t245 + b38*t246 - b38*t247 + b38*t248 - b38*t257 - b38*t259 + b38*t260 + b38*t261 + 3*b38*t262 - t223*t263 - t223*t265 + t223*t266 - t223*t267 + t223*t268 + t227*t543 + t228*t633 + t236*t310 + t236*t312 + t244*t306;
  M(9, 18) = -b28*t279 + b28*t280 - b28*t281 + b28*t282 - b28*t283 - b28*t284 + b28*t285 + b28*t286 + 3*b28*t287 + b31*t374 + b33*t493 + b34*t546 + b35*t461 + b35*t571 + b38*t307 - b38*t350 + b38*t396 + t227*t545 + t227*t547 + t228*t635 + t228*t636 - t229*t263 - t229*t265 + t229*t266 - t229*t267 + t229*t268 + t236*t314 + t244*t310 + t244*t312;
  M(9, 19) = b35*t467 - b38*t279 + b38*t280 - b38*t281 + b38*t282 - b38*t283 - b38*t284 + b38*t285 + b38*t286 + b38*b38*b38 + t227*t549 + t228*t639 + t244*t314;
}

}  // namespace essmat
