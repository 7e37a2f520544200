"""Source expressions used to generate ``coefficients.txt``.

Only needed to regenerate the table (requires sympy); the package reads the
expanded table at runtime.
"""

A_PARABOLA = """
2*(a^8-4*a^6*b^2+6*a^4*b^4-4*a^2*b^6+b^8-4*a^6*c^2+13*a^4*b^2*c^2-14*a^2*b^4*c^2+5*b^6*c^2+
6*a^4*c^4-23*a^2*b^2*c^4+15*b^4*c^4-4*a^2*c^6+14*b^2*c^6+c^8)*x*y-3*c^2*(2*a^6-8*a^4*b^2+
10*a^2*b^4-4*b^6-5*a^4*c^2+18*a^2*b^2*c^2-11*b^4*c^2+4*a^2*c^4-8*b^2*c^4-c^6)*y^2+2*(a^8-
4*a^6*b^2+6*a^4*b^4-4*a^2*b^6+b^8-4*a^6*c^2+13*a^4*b^2*c^2-23*a^2*b^4*c^2+14*b^6*c^2+
6*a^4*c^4-14*a^2*b^2*c^4+15*b^4*c^4-4*a^2*c^6+5*b^2*c^6+c^8)*x*z+2*(4*a^8-13*a^6*b^2+
15*a^4*b^4-7*a^2*b^6+b^8-13*a^6*c^2+31*a^4*b^2*c^2-35*a^2*b^4*c^2+17*b^6*c^2+15*a^4*c^4-
35*a^2*b^2*c^4+36*b^4*c^4-7*a^2*c^6+17*b^2*c^6+c^8)*y*z-3*b^2*(2*a^6-5*a^4*b^2+4*a^2*b^4-
b^6-8*a^4*c^2+18*a^2*b^2*c^2-8*b^4*c^2+10*a^2*c^4-11*b^2*c^4-4*c^6)*z^2+2*sqrt(3)*S*(2*(a^6-
3*a^4*b^2+3*a^2*b^4-b^6-5*a^4*c^2+9*a^2*b^2*c^2-4*b^4*c^2+7*a^2*c^4-7*b^2*c^4-3*c^6)*x*y+
(a^2-b^2-c^2)*(2*a^4-4*a^2*b^2+2*b^4-10*a^2*c^2+8*b^2*c^2+5*c^4)*y^2+2*(a^6-5*a^4*b^2+
7*a^2*b^4-3*b^6-3*a^4*c^2+9*a^2*b^2*c^2-7*b^4*c^2+3*a^2*c^4-4*b^2*c^4-c^6)*x*z+2*(2*a^6-
7*a^4*b^2+8*a^2*b^4-3*b^6-7*a^4*c^2+17*a^2*b^2*c^2-12*b^4*c^2+8*a^2*c^4-12*b^2*c^4-3*c^6)*y*z+
(a^2-b^2-c^2)*(2*a^4-10*a^2*b^2+5*b^4-4*a^2*c^2+8*b^2*c^2+2*c^4)*z^2)
"""

SKIP1_THROUGH_B = """
(sqrt(3)*(2*a^6-5*a^4*b^2+4*a^2*b^4-b^6-7*a^2*b^2*c^2+3*b^4*c^2-3*a^2*c^4+3*b^2*c^4+c^6)+
6*(6*a^4-5*a^2*b^2+b^4-4*a^2*c^2+2*b^2*c^2+c^4)*S)*x^2+(sqrt(3)*(3*a^6-7*a^4*b^2+5*a^2*b^4-
b^6+6*a^4*c^2-10*a^2*b^2*c^2+2*b^4*c^2-3*a^2*c^4+5*b^2*c^4)+2*(13*a^4-8*a^2*b^2+b^4-
17*a^2*c^2+7*b^2*c^2+4*c^4)*S)*x*y+(sqrt(3)*(4*a^6-14*a^4*b^2+13*a^2*b^4-3*b^6-4*a^4*c^2-
13*a^2*b^2*c^2+4*b^4*c^2-a^2*c^4+4*b^2*c^4+c^6)+2*(22*a^4-14*a^2*b^2+b^4-8*a^2*c^2+
7*b^2*c^2+c^4)*S)*x*z+(sqrt(3)*(5*a^6-7*a^4*b^2+2*a^2*b^4+6*a^4*c^2+3*a^2*b^2*c^2-2*b^4*c^2-
6*a^2*c^4+b^2*c^4+c^6)-2*(11*a^4-10*a^2*b^2+2*b^4-a^2*c^2+2*b^2*c^2-c^4)*S)*y*z+
(sqrt(3)*(a^6-15*a^4*b^2+9*a^2*b^4-b^6-2*a^4*c^2-3*a^2*b^2*c^2-b^4*c^2+a^2*c^4+2*b^2*c^4)+
6*(3*a^4+2*a^2*b^2-b^4-a^2*c^2)*S)*z^2
"""

AXIS_INFINITY = {
    "x": """8*a^6-8*a^4*b^2+a^2*b^4-b^6-8*a^4*c^2+6*a^2*b^2*c^2+b^4*c^2+a^2*c^4+b^2*c^4-c^6+
2*sqrt(3)*(b^2-c^2)^2*S""",
    "y": """-4*a^6+a^4*b^2+a^2*b^4+2*b^6+7*a^4*c^2-3*a^2*b^2*c^2-5*b^4*c^2-2*a^2*c^4+4*b^2*c^4-
c^6-2*sqrt(3)*(a^2-c^2)*(b^2-c^2)*S""",
    "z": """-4*a^6+7*a^4*b^2-2*a^2*b^4-b^6+a^4*c^2-3*a^2*b^2*c^2+4*b^4*c^2+a^2*c^4-5*b^2*c^4+
2*c^6+2*sqrt(3)*(a^2-b^2)*(b^2-c^2)*S""",
}

A_DIRECTRIX = """
(a^4-8*a^2*b^2+12*b^4-8*a^2*c^2+27*b^2*c^2+12*c^4-2*sqrt(3)*(2*a^2-5*b^2-5*c^2)*S)*x+
(6*a^4-23*a^2*b^2+22*b^4-30*a^2*c^2+58*b^2*c^2+39*c^4+2*sqrt(3)*(a^2-3*b^2-2*c^2)*S)*y+
(6*a^4-30*a^2*b^2+39*b^4-23*a^2*c^2+58*b^2*c^2+22*c^4+2*sqrt(3)*(a^2-2*b^2-3*c^2)*S)*z
"""

DIRECTRIX_VERTEX_A = {
    "x": """-sqrt(3)*(12*a^6-13*a^4*b^2-a^2*b^4+2*b^6-13*a^4*c^2-8*a^2*b^2*c^2-2*b^4*c^2-a^2*c^4-
2*b^2*c^4+2*c^6)-6*(3*a^2*b^2+3*a^2*c^2+2*b^2*c^2)*S""",
    "y": """sqrt(3)*(5*a^6+2*a^4*b^2-10*a^2*b^4+3*b^6-7*a^4*c^2-10*a^2*b^2*c^2-a^2*c^4-6*b^2*c^4+
3*c^6)-6*(a^4-5*a^2*b^2+b^4-3*b^2*c^2-c^4)*S""",
    "z": """sqrt(3)*(5*a^6-7*a^4*b^2-a^2*b^4+3*b^6+2*a^4*c^2-10*a^2*b^2*c^2-6*b^4*c^2-10*a^2*c^4+
3*c^6)-6*(a^4-b^4-5*a^2*c^2-3*b^2*c^2+c^4)*S""",
}

FOCUS_A = {
    "x": "sqrt(3)*(7*a^2*b^2 + 7*a^2*c^2 + 2*b^2*c^2 - 4*a^4 - b^4 - c^4) - 2*S*(8*a^2 + b^2 + c^2)",
    "y": "sqrt(3)*(2*a^2*b^2 - a^2*c^2 + 3*b^2*c^2 - 4*b^4 + c^4) + 2*S*(2*a^2 - 2*b^2 - c^2)",
    "z": "-sqrt(3)*(a^2*b^2 - 2*a^2*c^2 - 3*b^2*c^2 - b^4 + 4*c^4) + 2*S*(2*a^2 - b^2 - 2*c^2)",
}
