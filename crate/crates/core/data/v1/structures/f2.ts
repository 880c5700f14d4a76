structure f2
constants 1 0 −1
generators x y z
relations
  x^2 = y^2
  x^2z^2 = x^2
  y^2z^2 = x^2
end
elements 1 0 −1 x −x y −y z −z x² −x² z² −z² xy −xy xz −xz yz −yz x²z −x²z xyz −xyz
